"""Configuration loader."""
import dataclasses
import logging
import os
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Set, Tuple, Union

import confuse
import numpy as np
from confuse import ConfigError, RootView

from reductive_geom.algebra.lie_core import LieAlgebraData, ReductiveModel
from reductive_geom.exceptions import DimensionMismatchError, InputError, StructureConstantsError
from reductive_geom.geometry.string_check import StringTolerances
from reductive_geom.settings import (
    DEFAULT_JOBS,
    DEFAULT_OUTPUT_FORMAT,
    DEFAULT_RANK_THRESHOLD,
    DEFAULT_STRING_TOLERANCE,
    DEFAULT_TOLERANCE,
    OUTPUT_FORMATS,
    TOLERANCE_ENV,
)
from reductive_geom.utils import load_json_file, load_yaml_file

logger = logging.getLogger(__name__)


class Real(confuse.Template):
    """A template accepting numbers and numeric strings, converted to float."""

    def __init__(self, positive: bool = False, default: Any = confuse.REQUIRED):
        """Initialize the Real object."""
        super().__init__(default=default)
        self._positive = positive

    def convert(self, value: Any, view: confuse.ConfigView) -> float:
        """Check that the value is a (positive) real number."""
        if isinstance(value, bool) or not isinstance(value, (int, float, str)):
            self.fail("must be a real number", view, True)
        try:
            number = float(value)
        except ValueError:
            self.fail(f"must be a real number, got {value!r}", view)
        if self._positive and not number > 0:
            self.fail(f"must be positive, got {number}", view)

        return number


class PositiveInteger(confuse.Template):
    """A template for integers >= 1."""

    def convert(self, value: Any, view: confuse.ConfigView) -> int:
        """Check that the value is a positive integer."""
        if isinstance(value, bool) or not isinstance(value, int):
            self.fail("must be an integer", view, True)
        if value < 1:
            self.fail(f"must be at least 1, got {value}", view)

        return int(value)


class RealMapping(confuse.Template):
    """A template for a mapping of names to real numbers."""

    def convert(self, value: Any, view: confuse.ConfigView) -> Dict[str, float]:
        """Check that every value of the mapping is a real number."""
        if not isinstance(value, dict):
            self.fail("must be a mapping", view, True)
        output = {}
        for key, item in value.items():
            if isinstance(item, bool) or not isinstance(item, (int, float)):
                self.fail(f"value of {key!r} must be a real number", view, True)
            output[str(key)] = float(item)

        return output


class StringTolerancesDict(confuse.MappingTemplate):
    """String tolerances template."""

    def value(
        self,
        view: confuse.ConfigView,
        template: Optional[confuse.Template] = None,
    ) -> StringTolerances:
        """Get StringTolerances object from dict."""
        output = super().value(view, template)
        return StringTolerances(**output)


class ModelDict(confuse.MappingTemplate):
    """Model file template."""

    def value(
        self,
        view: confuse.ConfigView,
        template: Optional[confuse.Template] = None,
    ) -> ReductiveModel:
        """Get ReductiveModel object from dict."""
        output = super().value(view, template)
        return _build_model(output)


MATRIX_TEMPLATE = confuse.Sequence(confuse.Sequence(Real()))

MODEL_TEMPLATE = ModelDict(
    {
        "name": confuse.Optional(str, default="custom"),
        "dim": PositiveInteger(),
        "h_indices": confuse.Optional(confuse.Sequence(int), default=[]),
        "m_indices": confuse.Sequence(int),
        "structure_constants": confuse.Optional(
            confuse.Sequence(
                confuse.MappingTemplate({"i": int, "j": int, "k": int, "c": Real()})
            ),
            default=[],
        ),
        "metric_m": MATRIX_TEMPLATE,
        "Q": MATRIX_TEMPLATE,
        "params": confuse.Optional(RealMapping(), default={}),
    }
)

CONFIG_TEMPLATE = confuse.MappingTemplate(
    {
        "tolerance": confuse.Optional(Real(positive=True), default=DEFAULT_TOLERANCE),
        "rank_threshold": confuse.Optional(Real(positive=True), default=DEFAULT_RANK_THRESHOLD),
        "string_tolerances": confuse.Optional(
            StringTolerancesDict(
                {
                    name: confuse.Optional(Real(positive=True), default=DEFAULT_STRING_TOLERANCE)
                    for name in ("ricci", "delta_torsion", "nabla_spinor", "torsion_spinor")
                }
            )
        ),
        "jobs": confuse.Optional(PositiveInteger(), default=DEFAULT_JOBS),
        "output_format": confuse.Optional(
            confuse.Choice(OUTPUT_FORMATS), default=DEFAULT_OUTPUT_FORMAT
        ),
    }
)


@dataclasses.dataclass(frozen=True)
class Config:
    """ReductiveGeom Config object."""

    tolerance: float = DEFAULT_TOLERANCE
    rank_threshold: float = DEFAULT_RANK_THRESHOLD
    string_tolerances: StringTolerances = dataclasses.field(default_factory=StringTolerances)
    jobs: int = DEFAULT_JOBS
    output_format: str = DEFAULT_OUTPUT_FORMAT

    def override(self, **values: Any) -> "Config":
        """Return copy with values replaced, None values are ignored."""
        return dataclasses.replace(
            self, **{key: value for key, value in values.items() if value is not None}
        )


def validate_source_match_template(
    source: Any,
    template: confuse.Template,
    what: str = "configuration file",
) -> Any:
    """Return valid config if source match template, else raise InputError."""
    if not isinstance(source, dict):
        raise InputError(f"{what} validation failed: top level must be a mapping")
    try:
        _config = RootView([confuse.ConfigSource.of(source)])
        return _config.get(template)
    except ConfigError as error:
        logger.error("%s validation failed with error: %s", what, error)
        raise InputError(f"{what} validation failed: {error}") from error


def _check_index(value: int, dim: int, what: str) -> int:
    if not 0 <= value < dim:
        raise InputError(f"{what} index {value} out of range 0..{dim - 1}")
    return value


def _build_model(source: Mapping[str, Any]) -> ReductiveModel:
    """Assemble model from validated model file values.

    Antisymmetric partners of the given structure constants are filled in
    unless they are listed explicitly.
    """
    dim = source["dim"]
    constants = np.zeros((dim, dim, dim))
    given: Set[Tuple[int, int, int]] = set()
    for entry in source["structure_constants"]:
        key = tuple(_check_index(entry[name], dim, "structure constant") for name in "ijk")
        constants[key] = entry["c"]
        given.add(key)  # type: ignore

    for i, j, k in given:
        if (j, i, k) not in given:
            constants[j, i, k] = -constants[i, j, k]

    for name in ("h_indices", "m_indices"):
        for index in source[name]:
            _check_index(index, dim, name)

    try:
        return ReductiveModel(
            algebra=LieAlgebraData(constants),
            h_idx=tuple(source["h_indices"]),
            m_idx=tuple(source["m_indices"]),
            metric_m=np.array(source["metric_m"], dtype=float),
            Q=np.array(source["Q"], dtype=float),
            name=source["name"],
            params=source["params"],
        )
    except (DimensionMismatchError, StructureConstantsError, ValueError) as error:
        raise InputError(f"invalid model: {error}") from error


def model_from_dict(source: Any) -> ReductiveModel:
    """Build a model from the json model format."""
    return validate_source_match_template(source, MODEL_TEMPLATE, "model file")


def load_model_source(path: Union[str, Path]) -> ReductiveModel:
    """Load and validate json model file."""
    model = model_from_dict(load_json_file(path))
    logger.info("loaded model %s (dim %d, n %d) from %s", model.name, model.dim, model.n, path)
    return model


def _tolerance_from_env(env: Mapping[str, str]) -> Optional[float]:
    value = env.get(TOLERANCE_ENV)
    if value is None or value == "":
        return None
    try:
        tolerance = float(value)
    except ValueError as error:
        raise InputError(f"{TOLERANCE_ENV} must be a real number, got {value!r}") from error
    if not tolerance > 0:
        raise InputError(f"{TOLERANCE_ENV} must be positive, got {value!r}")
    return tolerance


def load_config(
    config_path: Optional[Union[str, Path]] = None,
    required: bool = False,
    env: Optional[Mapping[str, str]] = None,
) -> Config:
    """Load and validate yaml config file.

    A missing file yields the defaults unless `required` is set. The tolerance
    environment variable takes precedence over the file.
    """
    source: Dict[str, Any] = {}
    if config_path is not None and (required or Path(config_path).exists()):
        source = load_yaml_file(config_path) or {}

    valid_config = validate_source_match_template(source, CONFIG_TEMPLATE)
    if valid_config["string_tolerances"] is None:
        valid_config["string_tolerances"] = StringTolerances()

    config = Config(**valid_config)
    tolerance = _tolerance_from_env(os.environ if env is None else env)
    if tolerance is not None:
        logger.debug("tolerance %s taken from %s", tolerance, TOLERANCE_ENV)
        config = config.override(tolerance=tolerance)
    return config

