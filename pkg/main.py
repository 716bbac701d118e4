"""
L-Shape Envelope Optimizer
Minimal-envelope design and verification for L-shaped buildings
"""
import logging
import os
import sys
from pathlib import Path
from typing import List, Optional

from dotenv import load_dotenv

from casestudy import SpecError
from cli import HANDLERS, UsageError, build_parser
from config import CliConfig, ConfigError
from geometry import GeometryError, InconsistencyError
from oracle import EvaluationError

# exit status contract
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

ENV_FILE = Path(__file__).parent / ".env"


def setup_logging(level: Optional[str] = None, log_file: Optional[str] = None):
    """
    Configure logging on standard error, optionally mirrored to a UTF-8 file

    Args:
        level: Level name; defaults to $LSHAPE_LOG_LEVEL or WARNING
        log_file: Log file path; defaults to $LSHAPE_LOG_FILE (unset: no file)
    """
    log_format = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    level = (level or os.getenv("LSHAPE_LOG_LEVEL") or "WARNING").upper()
    log_file = log_file or os.getenv("LSHAPE_LOG_FILE")

    # Standard output carries the reports
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(logging.Formatter(log_format))
    handlers: List[logging.Handler] = [console_handler]

    if log_file:
        file_handler = logging.FileHandler(log_file, encoding='utf-8')
        file_handler.setFormatter(logging.Formatter(log_format))
        handlers.append(file_handler)

    logging.basicConfig(level=level, format=log_format, handlers=handlers, force=True)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Command-line entry point

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])

    Returns:
        0 on success, 1 on internal inconsistency or oracle disagreement,
        2 on invalid arguments or input
    """
    # logging settings may come from .env too
    if ENV_FILE.exists():
        load_dotenv(ENV_FILE)

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    setup_logging(args.log_level)
    logger = logging.getLogger("main")

    try:
        config = CliConfig(
            output_format=args.format,
            output_path=args.output,
            near_optimal_threshold=getattr(args, "threshold", None),
        )
        config.apply_tolerance_overrides(args.tol)
        if not config.validate():
            return EXIT_USAGE
        return HANDLERS[args.command](args, config)
    except (GeometryError, SpecError, ConfigError, UsageError) as e:
        logger.error(f"❌ {e}")
        return EXIT_USAGE
    except OSError as e:
        logger.error(f"❌ Cannot access {e.filename or 'file'}: {e.strerror or e}")
        return EXIT_USAGE
    except (InconsistencyError, EvaluationError) as e:
        logger.error(f"❌ Internal inconsistency: {e}", exc_info=True)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
