from utils.log import *
from utils.process import *
from utils.io import *
