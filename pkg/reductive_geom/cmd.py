"""Application entry point wiring the CLI commands into craft-cli."""
import contextlib
import inspect
import logging
import os
import sys
from typing import Any, List, Tuple, Type

from craft_cli import (
    ArgumentParsingError,
    CommandGroup,
    CraftError,
    Dispatcher,
    EmitterMode,
    GlobalArgument,
    ProvideHelpException,
    emit,
)

from reductive_geom import cli, utils
from reductive_geom.cli.base import GridCMD, ModelCMD
from reductive_geom.config import load_config
from reductive_geom.exceptions import InputError, ReductiveGeomError
from reductive_geom.settings import APP_NAME, APP_VERSION, CONFIG_PATH

GLOBAL_ARGS = [
    GlobalArgument("version", "flag", None, "--version", "Show the application version and exit"),
    GlobalArgument("config", "option", "-c", "--config", "Set the path to custom config."),
]

DEBUG_ENV = "REDUCTIVE_GEOM_ENABLE_DEVELOPER_DEBUG"
VERBOSITY_ENV = "REDUCTIVE_GEOM_VERBOSITY_LEVEL"

# errors reported as plain text on stderr, first match wins
PLAIN_ERRORS: Tuple[Tuple[Type[BaseException], int], ...] = (
    (ArgumentParsingError, 2),
    (ProvideHelpException, 0),
    (InputError, 2),
    (ReductiveGeomError, 1),
)


def get_all_subclasses(cls: Any) -> List[object]:
    """Return CLI command classes derived from cls."""
    return [
        obj
        for _, obj in inspect.getmembers(cli, inspect.isclass)
        if issubclass(obj, cls) and obj is not cls
    ]


def get_command_groups() -> List[CommandGroup]:
    """Group single model commands and grid commands."""
    return [
        CommandGroup("Model", get_all_subclasses(ModelCMD)),
        CommandGroup("Grid", get_all_subclasses(GridCMD)),
    ]


def get_verbosity() -> EmitterMode:
    """Return the emitter mode.

    BRIEF on a terminal, VERBOSE when stdin is not a tty, DEBUG with the
    developer debug variable. An explicit verbosity level variable wins.
    """
    verbosity = EmitterMode.BRIEF if sys.stdin.isatty() else EmitterMode.VERBOSE

    with contextlib.suppress(ValueError):
        if utils.strtobool(os.getenv(DEBUG_ENV, "n").strip()):
            verbosity = EmitterMode.DEBUG

    level = os.getenv(VERBOSITY_ENV)
    if not level:
        return verbosity

    try:
        return EmitterMode[level.strip().upper()]
    except KeyError:
        names = [mode.name.lower() for mode in EmitterMode]
        values = utils.humanize_list(names, "and", sort=False)
        raise ArgumentParsingError(
            f"cannot parse verbosity level {level!r} from environment "
            f"variable {VERBOSITY_ENV} (valid values are {values})"
        ) from KeyError


def get_dispatcher() -> Dispatcher:
    """Initialize the emitter and logging, return the Dispatcher."""
    verbosity = get_verbosity()
    emit.init(verbosity, APP_NAME, f"Starting {APP_NAME} app {APP_VERSION}.")

    # every record goes to the Emitter, which filters by verbosity
    logging.getLogger().setLevel(logging.DEBUG)

    emit.debug(f"verbosity is set to {verbosity}")
    return Dispatcher(
        APP_NAME,
        get_command_groups(),
        summary="Connections, Dirac operators and string equations on reductive spaces.",
        extra_global_args=GLOBAL_ARGS,
    )


def _run_dispatcher(dispatcher: Dispatcher) -> int:
    """Load config and run the selected command, return its exit code.

    `--version` prints the version; without a command nothing else is done.
    A config passed with `--config` must exist, the default one is optional.
    """
    args, filtered_params = dispatcher._parse_options(  # pylint: disable=W0212
        dispatcher.global_arguments, sys.argv[1:]
    )
    if args.get("version"):
        emit.message(f"ReductiveGeom: {APP_VERSION}")
        if not filtered_params:
            return 0

    global_args = dispatcher.pre_parse_args(sys.argv[1:])
    config_path = global_args.get("config")
    config = load_config(config_path, required=True) if config_path else load_config(CONFIG_PATH)

    dispatcher.load_command(config)
    return dispatcher.run() or 0


def _plain_error_code(error: BaseException) -> int:
    for error_type, code in PLAIN_ERRORS:
        if isinstance(error, error_type):
            return code
    return 1  # pragma: no cover


def exec_cmd() -> int:
    """Execute craft cli, return the process exit code."""
    dispatcher = get_dispatcher()

    try:
        return_code = _run_dispatcher(dispatcher)
        emit.ended_ok()
    except tuple(error_type for error_type, _ in PLAIN_ERRORS) as error:
        print(str(error), file=sys.stderr)  # to stderr, as argparse normally does
        emit.ended_ok()
        return_code = _plain_error_code(error)
    except CraftError as error:
        emit.error(error)
        return_code = 1
    except KeyboardInterrupt as exc:
        craft_error = CraftError("Interrupted.")
        craft_error.__cause__ = exc
        emit.error(craft_error)
        return_code = 130
    except Exception as exc:  # pylint: disable=W0718
        craft_error = CraftError(f"Application internal error: {exc!r}")
        craft_error.__cause__ = exc
        emit.error(craft_error)
        return_code = 1

    return return_code
