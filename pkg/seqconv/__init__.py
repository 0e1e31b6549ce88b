import logging
import sys

__version__ = "0.1.0"

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)
# stdout carries the report stream
logger.addHandler(logging.StreamHandler(sys.stderr))
