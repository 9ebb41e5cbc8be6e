import os
from dotenv import load_dotenv
load_dotenv()

# paths
LOGGER_PATH = os.getenv('COKERNEL_LOGGER_PATH', './logger/')
REPORT_PATH = os.getenv('COKERNEL_REPORT_PATH', './reports/')
SWEEP_CONFIG_PATH = os.getenv('COKERNEL_SWEEP_CONFIG', './sweep_config.json')
LOG_MAX_BYTES = int(os.getenv('COKERNEL_LOG_MAX_BYTES', str(100 * 1024 * 1024)))
LOG_BACKUP_COUNT = int(os.getenv('COKERNEL_LOG_BACKUPS', '3'))

# budgets, as log2 of the number of objects an exhaustive engine may visit
LIFT_BUDGET_LOG2 = int(os.getenv('COKERNEL_LIFT_BUDGET_LOG2', '24'))
FULL_BUDGET_LOG2 = int(os.getenv('COKERNEL_FULL_BUDGET_LOG2', '26'))
ORACLE_BUDGET_LOG2 = int(os.getenv('COKERNEL_ORACLE_BUDGET_LOG2', '16'))
ORACLE_MAX_ORDER_LOG2 = 12
MINOR_MAX_DIM = 6

# parallel engines
WORKERS = int(os.getenv('COKERNEL_WORKERS', '0'))  # 0 = all cores
CHUNK_SIZE = int(os.getenv('COKERNEL_CHUNK_SIZE', str(1 << 16)))
SAMPLE_BLOCK_SIZE = int(os.getenv('COKERNEL_SAMPLE_BLOCK', '4096'))

# arithmetic limits
MAX_MODULUS = 1 << 62
KERNEL_MAX_MODULUS = 1 << 31

# statistics
SIGMA_MULTIPLIER = 3.0
STATISTICAL_BAND = float(os.getenv('COKERNEL_STATISTICAL_BAND', '0.005'))
