"""Command-line entry point."""

from __future__ import annotations

import logging
import sys
from typing import Sequence

from pydantic import ValidationError
from pydantic_settings import CliApp, SettingsError

from pauli_duality.cli.router import PauliDualityApp, normalize_args
from pauli_duality.config.settings import settings
from pauli_duality.core.exceptions import PauliDualityError

logger = logging.getLogger(__name__)


def configure_logging() -> None:
    logging.basicConfig(
        level=getattr(logging, settings.log_level.upper()),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def main(argv: Sequence[str] | None = None) -> int:
    """Parse ``argv`` (``sys.argv[1:]`` when None), run the subcommand, return its exit code."""
    configure_logging()
    if settings.debug:
        logger.debug(f"Backend limits: dense L<={settings.dense_limit}, states L<={settings.state_limit}")
    try:
        args = normalize_args(sys.argv[1:] if argv is None else argv)
        app = CliApp.run(PauliDualityApp, cli_args=args)
    except ValidationError as exc:
        logger.error(f"Invalid arguments: {exc}")
        return 2
    except SettingsError as exc:
        logger.error(str(exc))
        return 2
    except PauliDualityError as exc:
        logger.error(exc.detail)
        return exc.exit_code
    except SystemExit as exc:
        # argparse exits 2 on unknown or malformed flags and 0 after --help
        return exc.code if isinstance(exc.code, int) else 2
    return app.exit_code


if __name__ == "__main__":
    sys.exit(main())
