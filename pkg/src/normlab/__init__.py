##
# Licensed under the MIT License.
##
__version__ = "0.1.0"

from normlab.core import MonomialIdeal, RingDescriptor
from normlab.clutter import Clutter
from normlab.jobs import JobSpec, run
