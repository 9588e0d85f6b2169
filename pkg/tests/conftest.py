##
# Licensed under the MIT License.
##

from test_ideals import *
from test_ideals.monomial_ideals import *
from test_ideals.clutters import *

collect_ignore = ["setup.py"]
