import os

from appdirs import user_data_dir

SETTINGS_FILE = os.path.join(user_data_dir("seqconv", ""), "settings.json")

DEFAULT_R_RANGE = "1..4"
DEFAULT_N_RANGE = "0..20"
DEFAULT_FORMAT = "table"
DEFAULT_PROVENANCE = "theorem"
