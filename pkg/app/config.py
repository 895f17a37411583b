import os
from dotenv import load_dotenv

load_dotenv()


def _int(name: str, default: int) -> int:
    return int(os.getenv(name, str(default)))


ORACLE_EDGE_CAP = _int("ECK_ORACLE_EDGE_CAP", 24)
ILP_VC_CAP = _int("ECK_ILP_VC_CAP", 4)
ILP_TYPE_CAP = _int("ECK_ILP_TYPE_CAP", 20000)
ILP_NODE_CAP = _int("ECK_ILP_NODE_CAP", 50000)
RAINBOW_K_CAP = _int("ECK_RAINBOW_K_CAP", 12)
DIVIDE_COLOR_L_CAP = _int("ECK_DIVIDE_COLOR_L_CAP", 16)
DIVIDE_COLOR_MAX_ROUNDS = _int("ECK_DIVIDE_COLOR_MAX_ROUNDS", 4096)
DIVIDE_COLOR_WORK_BUDGET = _int("ECK_DIVIDE_COLOR_WORK_BUDGET", 500000)
GADGET_EDGE_CAP = _int("ECK_GADGET_EDGE_CAP", 400)

# 0 disables the wall-time cap
BUDGET_MS = _int("ECK_BUDGET_MS", 0)
DEFAULT_SEED = _int("ECK_SEED", 0)
LOG_LEVEL = os.getenv("ECK_LOG_LEVEL", "WARNING")
