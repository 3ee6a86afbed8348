import logging
import sys

from app.core.config import settings

# Configure logging
logging.basicConfig(
    level=getattr(logging, settings.LOG_LEVEL.upper(), logging.INFO),
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    stream=sys.stderr,
)
logger = logging.getLogger(__name__)

from app.cli.cli import run_cli


if __name__ == "__main__":
    sys.exit(run_cli(sys.argv[1:]))
