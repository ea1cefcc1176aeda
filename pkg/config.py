"""Configuration management for the rich-club toolkit."""
import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Base paths
BASE_DIR = Path(__file__).parent
DATA_DIR = Path(os.getenv("DATA_DIR", str(BASE_DIR / "data")))
OUTPUT_DIR = Path(os.getenv("OUTPUT_DIR", str(DATA_DIR / "runs")))
LOGS_DIR = Path(os.getenv("LOGS_DIR", str(BASE_DIR / "logs")))

# The file sink needs its directory up front
LOGS_DIR.mkdir(parents=True, exist_ok=True)

# Logging
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
LOG_FILE = os.getenv("LOG_FILE", str(LOGS_DIR / "richclub.log"))
SHOW_PROGRESS = os.getenv("SHOW_PROGRESS", "true").lower() == "true"

# Analysis defaults
DEFAULT_BIN_WIDTH = float(os.getenv("DEFAULT_BIN_WIDTH", "0.05"))
DEFAULT_R_CUT = float(os.getenv("DEFAULT_R_CUT", "0.05"))
DEFAULT_R_MAX = float(os.getenv("DEFAULT_R_MAX", "0.01"))
DEFAULT_K_MIN = int(os.getenv("DEFAULT_K_MIN", "1"))
DEFAULT_FIT_METHOD = os.getenv("DEFAULT_FIT_METHOD", "ccdf_regression")
KS_MIN_TAIL = int(os.getenv("KS_MIN_TAIL", "50"))
CURVE_POINTS = int(os.getenv("CURVE_POINTS", "40"))
PATH_BLOCK_SIZE = int(os.getenv("PATH_BLOCK_SIZE", "256"))
_hop_limit = os.getenv("DEFAULT_HOP_LIMIT")
DEFAULT_HOP_LIMIT = float(_hop_limit) if _hop_limit else None

# Generator defaults
DEFAULT_M = int(os.getenv("DEFAULT_M", "3"))
INET_EXPONENT = float(os.getenv("INET_EXPONENT", "2.22"))
EXTRA_LINK_RETRIES = int(os.getenv("EXTRA_LINK_RETRIES", "100"))

# Attack experiments
ATTACK_TRIALS = int(os.getenv("ATTACK_TRIALS", "10"))

# Valid choices
GENERATOR_MODELS = ["ba", "fitness_ba", "inet_like", "rich_club_ba", "er_random"]
FIT_METHODS = ["ccdf_regression", "discrete_mle"]
ANALYZE_METRICS = ["phi", "matrix", "summary", "hops", "club_degrees"]
