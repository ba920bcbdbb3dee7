# scripts/wl2cert/config.py
# Run configuration: default.json, an optional --config file and CLI flags merged into one validated RunConfig.

from __future__ import annotations

"""
scripts.wl2cert.config
----------------------

Convention:
- Default config lives at: helpers/configs/wl2cert/default.json
- A --config file overrides it key by key (nested objects merge, lists replace)
- CLI flags override both
"""

import copy
import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

from helpers.operators import OperatorParams
from helpers.quadrature import DomainSpec, QuadratureGrid
from helpers.validation import (
    ValidationError,
    ensure_dict,
    ensure_int,
    ensure_list,
    ensure_rational,
    path_join,
    qpath,
    require_dict,
    require_int,
    require_int_list,
    require_one_of,
)
from helpers.zpoly import GaussianRational, load_gaussian
from services.solver import TruncationSpec
from services.transforms import WeightSpec

FORMATS = ("json", "csv")
SWEEP_TABLES = ("solve", "scaling", "cross_terms", "general_weight")


def _helpers_root_from_here() -> Path:
    """
    Resolve the helpers/ root based on this file location.

    Expected path:
      scripts/wl2cert/config.py
      parents:
        [0]=wl2cert
        [1]=scripts
        [2]=repo root  <-- helpers/ sits here
    """
    return Path(__file__).resolve().parents[2] / "helpers"


def default_config_path(*, helpers_root: Optional[Path] = None) -> Path:
    root = (helpers_root or _helpers_root_from_here()).resolve()
    return root / "configs" / "wl2cert" / "default.json"


def merge_config(base: Mapping[str, Any], override: Mapping[str, Any]) -> Dict[str, Any]:
    """Nested dicts merge; every other value (lists included) replaces."""
    out = copy.deepcopy(dict(base))
    for key, v in override.items():
        if isinstance(v, Mapping) and isinstance(out.get(key), Mapping):
            out[key] = merge_config(out[key], v)
        else:
            out[key] = copy.deepcopy(v)
    return out


@dataclass(frozen=True)
class SuiteConfig:
    ks: tuple[int, ...] = (1, 2, 3)
    count: int = 50
    degree: int = 6

    @staticmethod
    def from_dict(d: Dict[str, Any], *, path: str = "suite") -> "SuiteConfig":
        obj = ensure_dict(d, path=path)
        ks = require_int_list(obj, "ks", path=path, min_v=1, strictly_increasing=True, default=[1, 2, 3])
        if not ks:
            raise ValidationError(f"{qpath(path_join(path, 'ks'))} must not be empty")
        return SuiteConfig(
            ks=tuple(ks),
            count=require_int(obj, "count", path=path, min_v=2, default=50),
            degree=require_int(obj, "degree", path=path, min_v=0, default=6),
        )


@dataclass(frozen=True)
class SweepConfig:
    ks: tuple[int, ...] = (1, 2)
    families: tuple[tuple[Fraction, Fraction, Fraction], ...] = ()
    cs: tuple[GaussianRational, ...] = (GaussianRational(0),)
    lambdas: tuple[Fraction, ...] = (Fraction(1),)
    f_degree: int = 3
    table: str = "solve"

    @staticmethod
    def from_dict(d: Dict[str, Any], *, path: str = "sweep") -> "SweepConfig":
        obj = ensure_dict(d, path=path)
        fam_path = path_join(path, "families")
        families = []
        for i, raw in enumerate(ensure_list(obj.get("families", []), path=fam_path)):
            item_path = f"{fam_path}[{i}]"
            triple = ensure_list(raw, path=item_path)
            if len(triple) != 3:
                raise ValidationError(f"{qpath(item_path)} must be [alpha, beta, gamma] (got {len(triple)} entries)")
            a, b, g = (ensure_rational(x, path=f"{item_path}[{j}]") for j, x in enumerate(triple))
            if a == 0 and b == 0 and g == 0:
                raise ValidationError(f"{qpath(item_path)}: (alpha, beta, gamma) must not all be zero")
            families.append((a, b, g))
        cs_path = path_join(path, "cs")
        cs = tuple(
            load_gaussian(raw, path=f"{cs_path}[{i}]")
            for i, raw in enumerate(ensure_list(obj.get("cs", [{"re": 0, "im": 0}]), path=cs_path))
        )
        lam_path = path_join(path, "lambdas")
        lambdas = tuple(
            ensure_rational(raw, path=f"{lam_path}[{i}]", positive=True)
            for i, raw in enumerate(ensure_list(obj.get("lambdas", ["1"]), path=lam_path))
        )
        return SweepConfig(
            ks=tuple(require_int_list(obj, "ks", path=path, min_v=1, strictly_increasing=True, default=[1, 2])),
            families=tuple(families),
            cs=cs,
            lambdas=lambdas,
            f_degree=require_int(obj, "f_degree", path=path, min_v=0, default=3),
            table=require_one_of(obj, "table", SWEEP_TABLES, path=path, default="solve"),
        )


@dataclass(frozen=True)
class OracleConfig:
    max_degree: int = 32
    pairs: int = 10

    @staticmethod
    def from_dict(d: Dict[str, Any], *, path: str = "oracle") -> "OracleConfig":
        obj = ensure_dict(d, path=path)
        return OracleConfig(
            max_degree=require_int(obj, "max_degree", path=path, min_v=0, default=32),
            pairs=require_int(obj, "pairs", path=path, min_v=0, default=10),
        )


@dataclass(frozen=True)
class RunConfig:
    """
    Everything a command needs. N and buffer may stay None: the runner derives
    N from f and buffer = k.
    """

    params: OperatorParams
    N: Optional[int] = None
    buffer: Optional[int] = None
    growth_schedule: tuple[int, ...] = ()
    weight: WeightSpec = WeightSpec()
    domain: Optional[DomainSpec] = None
    grid: QuadratureGrid = QuadratureGrid()
    seed: int = 0
    format: str = "json"
    threads: Optional[int] = None
    suite: SuiteConfig = SuiteConfig()
    certify_N: int = 6
    sweep: SweepConfig = SweepConfig()
    oracle: OracleConfig = OracleConfig()
    raw: Dict[str, Any] = field(default_factory=dict, compare=False, repr=False)

    @property
    def scaled(self) -> bool:
        return self.weight.lam != 1 or bool(self.weight.z0)

    def truncation(self, N: int) -> TruncationSpec:
        buf = self.buffer if self.buffer is not None else self.params.k
        return TruncationSpec(N=N, buffer=buf, growth_schedule=self.growth_schedule)

    @staticmethod
    def from_dict(d: Dict[str, Any], *, path: str = "") -> "RunConfig":
        obj = ensure_dict(d, path=path or "config")
        params = OperatorParams.from_dict(require_dict(obj, "params", path=path), path=path_join(path, "params"))

        trunc_path = path_join(path, "trunc")
        trunc = require_dict(obj, "trunc", path=path, default={})
        N = trunc.get("N")
        buffer = trunc.get("buffer")
        domain_raw = obj.get("domain")
        threads = obj.get("threads")
        return RunConfig(
            params=params,
            N=None if N is None else ensure_int(N, path=path_join(trunc_path, "N"), min_v=0),
            buffer=None if buffer is None else ensure_int(buffer, path=path_join(trunc_path, "buffer"), min_v=0),
            growth_schedule=tuple(
                require_int_list(
                    trunc, "growth_schedule", path=trunc_path, min_v=0, strictly_increasing=True, default=[]
                )
            ),
            weight=WeightSpec.from_dict(require_dict(obj, "weight", path=path, default={}), path=path_join(path, "weight")),
            domain=None if domain_raw is None else DomainSpec.from_dict(domain_raw, path=path_join(path, "domain")),
            grid=QuadratureGrid.from_dict(require_dict(obj, "grid", path=path, default={}), path=path_join(path, "grid")),
            seed=require_int(obj, "seed", path=path, min_v=0, default=0),
            format=require_one_of(obj, "format", FORMATS, path=path, default="json"),
            threads=None if threads is None else ensure_int(threads, path=path_join(path, "threads"), min_v=1),
            suite=SuiteConfig.from_dict(require_dict(obj, "suite", path=path, default={}), path=path_join(path, "suite")),
            certify_N=require_int(
                require_dict(obj, "certify", path=path, default={}), "N", path=path_join(path, "certify"), min_v=0, default=6
            ),
            sweep=SweepConfig.from_dict(require_dict(obj, "sweep", path=path, default={}), path=path_join(path, "sweep")),
            oracle=OracleConfig.from_dict(require_dict(obj, "oracle", path=path, default={}), path=path_join(path, "oracle")),
            raw=dict(obj),
        )


def read_config_file(p: Path) -> Dict[str, Any]:
    try:
        raw = json.loads(Path(p).read_text(encoding="utf-8"))
    except Exception as e:
        raise ValidationError(f"Failed to load wl2cert config JSON: {p}") from e
    return ensure_dict(raw, path=str(p))


def load_default_dict(*, helpers_root: Optional[Path] = None) -> Dict[str, Any]:
    return read_config_file(default_config_path(helpers_root=helpers_root))


def load_default_config(*, helpers_root: Optional[Path] = None) -> RunConfig:
    return RunConfig.from_dict(load_default_dict(helpers_root=helpers_root))


def load_run_config(
    overrides: Mapping[str, Any],
    *,
    config_path: Optional[Path] = None,
    helpers_root: Optional[Path] = None,
) -> RunConfig:
    """default.json <- config_path <- overrides."""
    merged = load_default_dict(helpers_root=helpers_root)
    if config_path is not None:
        merged = merge_config(merged, read_config_file(config_path))
    merged = merge_config(merged, overrides)
    return RunConfig.from_dict(merged)


__all__ = [
    "FORMATS",
    "SWEEP_TABLES",
    "default_config_path",
    "merge_config",
    "SuiteConfig",
    "SweepConfig",
    "OracleConfig",
    "RunConfig",
    "read_config_file",
    "load_default_dict",
    "load_default_config",
    "load_run_config",
]
