import sys

from seqconv.cli import seqconv

sys.exit(seqconv())
