"""Run configuration: one TOML file describing beams, states, tolerances,
geometry, density of states and output options.

Every block is optional; anything missing falls back to the built-in demo
defaults so each subcommand runs standalone.  Environment overrides are
limited to the output path (VORTEXOAM_OUT) and the thread count
(VORTEXOAM_THREADS, echoed into records; evaluation itself is
single-threaded).
"""

from __future__ import annotations

import os
import sys
from dataclasses import dataclass, field

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .beams import CylinderVolume, VortexBeam
from .errors import ConfigError, DomainError, VortexOamError
from .ev_coupling import DEFAULT_SINGULAR_MARGIN, FixedGeometry, IntegratedGeometry
from .ledge import DensityOfStates
from .matter import BesselProfile, ComState, HydrogenicState, RingGaussianProfile
from .quadrature import Tolerance

__all__ = ["RunConfig", "parse_mj", "format_mj"]


def parse_mj(text: str) -> int:
    """'+3/2' / '-1/2' / '1/2' -> doubled integer; plain ints also accepted."""
    s = str(text).strip()
    try:
        if "/" in s:
            num, den = s.split("/")
            if int(den) != 2:
                raise ValueError
            return int(num)
        return 2 * int(s)
    except ValueError as exc:
        raise ConfigError(f"cannot parse m_j value {text!r}") from exc


def format_mj(two_mj: int) -> str:
    sign = "+" if two_mj >= 0 else "-"
    return f"{sign}{abs(two_mj)}/2"


def _require(table: dict, key: str, context: str):
    if key not in table:
        raise ConfigError(f"missing key {key!r} in {context}")
    return table[key]


def _build_beam(name: str, t: dict) -> VortexBeam:
    try:
        return VortexBeam(
            kind=_require(t, "kind", f"beam.{name}"),
            l=int(_require(t, "l", f"beam.{name}")),
            k_perp=float(_require(t, "k_perp", f"beam.{name}")),
            k_z=float(_require(t, "k_z", f"beam.{name}")),
            omega=float(t["omega"]) if "omega" in t else None,
            amplitude=float(t.get("amplitude", 1.0)),
            polarization=tuple(t.get("polarization", (1.0, 0.0, 0.0))),
        )
    except DomainError as exc:
        raise ConfigError(f"beam.{name}: {exc}") from exc


def _build_hydrogenic(name: str, t: dict) -> HydrogenicState:
    try:
        return HydrogenicState(
            n=int(_require(t, "n", f"hydrogenic.{name}")),
            l=int(_require(t, "l", f"hydrogenic.{name}")),
            m=int(_require(t, "m", f"hydrogenic.{name}")),
            mu=float(t.get("mu", 1.0)),
        )
    except DomainError as exc:
        raise ConfigError(f"hydrogenic.{name}: {exc}") from exc


def _build_com(name: str, t: dict) -> ComState:
    kind = t.get("profile", "ring_gaussian")
    try:
        if kind == "ring_gaussian":
            profile = RingGaussianProfile(
                rho0=float(_require(t, "rho0", f"com.{name}")),
                sigma=float(_require(t, "sigma", f"com.{name}")),
            )
        elif kind == "bessel":
            profile = BesselProfile(k_r=float(_require(t, "profile_k_r", f"com.{name}")))
        else:
            raise ConfigError(f"com.{name}: unknown profile {kind!r}")
        return ComState(
            K_R=float(t.get("K_R", 0.0)),
            K_z=float(t.get("K_z", 0.0)),
            L=int(t.get("L", 0)),
            profile=profile,
        )
    except DomainError as exc:
        raise ConfigError(f"com.{name}: {exc}") from exc


def _build_dos(table: dict) -> DensityOfStates:
    weights = {}
    for shell, entries in table.items():
        if not isinstance(entries, dict):
            raise ConfigError(f"dos.{shell} must be a table of m_j -> weight")
        for mj_text, w in entries.items():
            weights[(shell, parse_mj(mj_text))] = float(w)
    try:
        return DensityOfStates(weights)
    except DomainError as exc:
        raise ConfigError(f"dos: {exc}") from exc


@dataclass
class RunConfig:
    tolerance: Tolerance = field(default_factory=Tolerance)
    beams: dict = field(default_factory=dict)
    hydrogenic: dict = field(default_factory=dict)
    com: dict = field(default_factory=dict)
    dos: DensityOfStates | None = None
    geometry_table: dict = field(default_factory=dict)
    volume_table: dict = field(default_factory=dict)
    ov_table: dict = field(default_factory=dict)
    ev_table: dict = field(default_factory=dict)
    output_format: str = "json"
    output_path: str | None = None
    singular_margin: float = DEFAULT_SINGULAR_MARGIN
    radial_factor: float = 1.0
    threads: int = 1

    @classmethod
    def from_toml(cls, path: str) -> "RunConfig":
        try:
            with open(path, "rb") as fh:
                data = tomllib.load(fh)
        except OSError as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
        except tomllib.TOMLDecodeError as exc:
            raise ConfigError(f"config {path} is not valid TOML: {exc}") from exc
        return cls.from_dict(data)

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        cfg = cls()
        tol = data.get("tolerance", {})
        try:
            cfg.tolerance = Tolerance(
                abs_tol=float(tol.get("abs_tol", 1e-10)),
                rel_tol=float(tol.get("rel_tol", 1e-8)),
                max_depth=int(tol.get("max_depth", 40)),
            )
        except DomainError as exc:
            raise ConfigError(f"tolerance: {exc}") from exc
        cfg.beams = {n: _build_beam(n, t) for n, t in data.get("beam", {}).items()}
        cfg.hydrogenic = {
            n: _build_hydrogenic(n, t) for n, t in data.get("hydrogenic", {}).items()
        }
        cfg.com = {n: _build_com(n, t) for n, t in data.get("com", {}).items()}
        if "dos" in data:
            cfg.dos = _build_dos(data["dos"])
        cfg.geometry_table = dict(data.get("geometry", {}))
        cfg.volume_table = dict(data.get("volume", {}))
        cfg.ov_table = dict(data.get("ov", {}))
        cfg.ev_table = dict(data.get("ev", {}))
        out = data.get("output", {})
        cfg.output_format = out.get("format", "json")
        if cfg.output_format not in ("csv", "json"):
            raise ConfigError(f"output.format must be csv or json, got {cfg.output_format!r}")
        cfg.output_path = out.get("path")
        defaults = data.get("defaults", {})
        cfg.singular_margin = float(defaults.get("singular_margin", DEFAULT_SINGULAR_MARGIN))
        cfg.radial_factor = float(defaults.get("radial_factor", 1.0))
        cfg.apply_env()
        return cfg

    @classmethod
    def default(cls) -> "RunConfig":
        """Built-in demo blocks so every subcommand runs without a file."""
        cfg = cls()
        cfg.beams = {
            "pump": VortexBeam("optical", l=1, k_perp=1.0, k_z=0.5),
            "probe_in": VortexBeam("electron", l=1, k_perp=1.0, k_z=10.0),
            "probe_out": VortexBeam("electron", l=0, k_perp=1.0, k_z=10.0),
        }
        cfg.hydrogenic = {
            "ground": HydrogenicState(1, 0, 0),
            "excited": HydrogenicState(2, 1, 1),
        }
        ring = RingGaussianProfile(rho0=1.8, sigma=0.4)
        cfg.com = {
            "rest": ComState(K_R=0.0, K_z=0.0, L=0, profile=ring),
            "kicked": ComState(K_R=0.0, K_z=0.5, L=1, profile=ring),
        }
        cfg.geometry_table = {"mode": "fixed", "F": 2.0, "G": 1.0}
        cfg.ov_table = {
            "beam": "pump",
            "internal_initial": "ground",
            "internal_final": "excited",
            "com_initial": "rest",
            "com_final": "kicked",
            "n_initial": 1,
            "n_final": 0,
        }
        cfg.ev_table = {
            "beam_initial": "probe_in",
            "beam_final": "probe_out",
            "internal_initial": "ground",
            "internal_final": "excited",
            "com_initial": "rest",
            "com_final": "rest",
        }
        cfg.apply_env()
        return cfg

    def apply_env(self):
        env_out = os.environ.get("VORTEXOAM_OUT")
        if env_out:
            self.output_path = env_out
        env_threads = os.environ.get("VORTEXOAM_THREADS")
        if env_threads:
            try:
                self.threads = int(env_threads)
            except ValueError as exc:
                raise ConfigError(f"VORTEXOAM_THREADS must be an integer") from exc
            if self.threads < 1:
                raise ConfigError("VORTEXOAM_THREADS must be >= 1")

    # ---- resolution helpers -------------------------------------------

    def resolve(self, table: dict, key: str, pool: dict, pool_name: str):
        name = table.get(key)
        if name is None:
            raise ConfigError(f"missing {key!r} in [{pool_name}] block")
        if name not in pool:
            raise ConfigError(f"{key} = {name!r} does not name a configured block")
        return pool[name]

    def build_geometry(self):
        table = self.geometry_table or {"mode": "fixed", "F": 2.0, "G": 1.0}
        mode = table.get("mode", "fixed")
        try:
            if mode == "fixed":
                return FixedGeometry(
                    F=float(_require(table, "F", "geometry")),
                    G=float(_require(table, "G", "geometry")),
                    kappa=float(table["kappa"]) if "kappa" in table else None,
                    lam=float(table["lam"]) if "lam" in table else None,
                    eta=float(table["eta"]) if "eta" in table else None,
                    margin=float(table.get("margin", self.singular_margin)),
                )
            if mode == "integrated":
                ev = self.ev_table
                return IntegratedGeometry(
                    beam_i=self.resolve(ev, "beam_initial", self.beams, "ev"),
                    beam_f=self.resolve(ev, "beam_final", self.beams, "ev"),
                    com_i=self.resolve(ev, "com_initial", self.com, "ev"),
                    com_f=self.resolve(ev, "com_final", self.com, "ev"),
                    volume=self.build_volume(
                        self.resolve(ev, "beam_initial", self.beams, "ev")
                    ),
                    margin=float(table.get("margin", self.singular_margin)),
                )
        except VortexOamError:
            raise
        except Exception as exc:
            raise ConfigError(f"geometry: {exc}") from exc
        raise ConfigError(f"geometry.mode must be fixed or integrated, got {mode!r}")

    def build_volume(self, beam: VortexBeam) -> CylinderVolume:
        if self.volume_table:
            try:
                return CylinderVolume(
                    r_max=float(_require(self.volume_table, "r_max", "volume")),
                    l_z=float(_require(self.volume_table, "l_z", "volume")),
                )
            except DomainError as exc:
                raise ConfigError(f"volume: {exc}") from exc
        return CylinderVolume.default_for(beam)

    def defaults_block(self) -> dict:
        """Versioned defaults echoed into every record."""
        return {
            "units": "atomic",
            "abs_tol": self.tolerance.abs_tol,
            "rel_tol": self.tolerance.rel_tol,
            "max_depth": self.tolerance.max_depth,
            "singular_margin": self.singular_margin,
            "radial_factor": self.radial_factor,
            "threads": self.threads,
        }
