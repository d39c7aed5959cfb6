"""Rydberg electronic structure: model potential, quantum-defect energies,
Numerov radial wavefunctions and electronic radial matrix elements.

Quantum-defect energies are *inputs* to the radial solve, not eigenvalues to
converge: integration runs inward only, from deep in the classically
forbidden tail, on a grid uniform in xi = sqrt(r).  With u = r*psi and
chi = u / sqrt(xi) the radial equation becomes

    chi'' = W chi,   W = 8 xi^2 (V(xi^2) - E) + (2l + 1/2)(2l + 3/2) / xi^2,

which Numerov handles at O(h^4).  Because E is not an exact eigenvalue of the
model potential, high-l solutions can blow up under the inner centrifugal
barrier; the blow-up is cut at the innermost |chi| minimum and flagged rather
than hidden.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy.integrate import simpson

from .units import FINE_STRUCTURE, amu_to_au

__all__ = [
    "SpeciesParams",
    "RadialGrid",
    "RydbergState",
    "default_grid",
    "model_potential",
    "qd_energy",
    "solve_radial",
    "radial_matrix_element",
    "load_species",
]

# inner cutoff (au).  Kept well below the innermost core oscillation
# (~Z^{-1} for the deepest s-like node) so inward integration accumulates the
# full WKB phase and the node count comes out right; truncating at the core
# polarizability scale alpha_c^{1/3} instead silently loses ~4 nodes for Rb.
R_MIN = 1e-3
XI_STEP = 0.01


@dataclass(frozen=True)
class SpeciesParams:
    """Per-species inputs: nuclear charge, core-potential constants per l,
    Rydberg-Ritz defect series per (l, j), mass."""

    name: str
    Z: int
    mass: float                       # atomic units (electron masses)
    alpha_c: float
    so_scale: float
    potential: dict                   # l -> (a1, a2, a3, a4, rc)
    defects: dict                     # (l, 2j) -> coefficient tuple

    def __post_init__(self):
        if self.Z < 1:
            raise ValueError(f"nuclear charge must be >= 1, got {self.Z}")
        if self.alpha_c < 0:
            raise ValueError("core polarizability must be non-negative")
        for l, (a1, a2, a3, a4, rc) in self.potential.items():
            if rc <= 0:
                raise ValueError(f"cutoff radius must be positive (l={l})")

    def potential_for(self, l: int) -> tuple:
        lmax = max(self.potential)
        return self.potential[min(l, lmax)]

    def defect_series(self, l: int, j: float) -> tuple | None:
        return self.defects.get((l, round(2 * j)))

    @classmethod
    def from_file(cls, path) -> "SpeciesParams":
        """Parse the sectioned key=value species format (see data/rb.species)."""
        atom: dict = {}
        potential: dict = {}
        defects: dict = {}
        section = None
        for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.startswith("["):
                if not line.endswith("]"):
                    raise ValueError(f"{path}:{lineno}: malformed section header {raw!r}")
                parts = line[1:-1].split()
                kind = parts[0]
                tags = dict(p.split("=", 1) for p in parts[1:])
                if kind == "atom":
                    section = ("atom",)
                elif kind == "potential":
                    section = ("potential", int(tags["l"]))
                    potential[section[1]] = {}
                elif kind == "defect":
                    section = ("defect", int(tags["l"]), round(2 * float(tags["j"])))
                else:
                    raise ValueError(f"{path}:{lineno}: unknown section {kind!r}")
                continue
            if section is None or "=" not in line:
                raise ValueError(f"{path}:{lineno}: stray line {raw!r}")
            key, val = (s.strip() for s in line.split("=", 1))
            if section[0] == "atom":
                atom[key] = val
            elif section[0] == "potential":
                potential[section[1]][key] = float(val)
            else:
                if key != "d":
                    raise ValueError(f"{path}:{lineno}: defect blocks take only 'd'")
                defects[(section[1], section[2])] = tuple(float(t) for t in val.split())
        pot = {}
        for l, kv in potential.items():
            try:
                pot[l] = tuple(kv[k] for k in ("a1", "a2", "a3", "a4", "rc"))
            except KeyError as e:
                raise ValueError(f"{path}: potential block l={l} missing {e}") from None
        try:
            return cls(
                name=atom.get("name", Path(path).stem),
                Z=int(atom["Z"]),
                mass=amu_to_au(float(atom["mass_amu"])),
                alpha_c=float(atom["alpha_c"]),
                so_scale=float(atom.get("so_scale", "1.0")),
                potential=pot,
                defects=defects,
            )
        except (KeyError, ValueError) as e:
            raise ValueError(f"{path}: bad atom block ({e})") from None


@dataclass(frozen=True)
class RadialGrid:
    """Uniform grid in xi = sqrt(r) on [sqrt(r_min), sqrt(r_max)]."""

    r_min: float
    r_max: float
    step: float = XI_STEP

    def __post_init__(self):
        if not 0 < self.r_min < self.r_max:
            raise ValueError(f"need 0 < r_min < r_max, got {self.r_min}, {self.r_max}")
        if self.step <= 0:
            raise ValueError("step must be positive")

    @property
    def xi(self) -> np.ndarray:
        # nodes at sqrt(r_min) + k*step, overshooting r_max by < one step:
        # grids sharing (r_min, step) then coincide exactly on their overlap,
        # so cross-n matrix elements need no resampling
        lo, hi = math.sqrt(self.r_min), math.sqrt(self.r_max)
        npts = int(math.ceil((hi - lo) / self.step - 1e-9)) + 1
        return lo + np.arange(npts) * self.step

    @property
    def h(self) -> float:
        return self.step


def default_grid(n: int, step: float = XI_STEP) -> RadialGrid:
    # outer cutoff 2n(n+15): comfortably past the turning point ~2n^2
    return RadialGrid(R_MIN, 2.0 * n * (n + 15.0), step)


@dataclass(frozen=True, eq=False)
class RydbergState:
    """One solved |n l j (m_j)> level: energy, chi on the grid, diagnostics."""

    n: int
    l: int
    j: float
    energy: float
    grid: RadialGrid
    chi: np.ndarray                   # chi = r psi / xi^(1/2), normalized
    nodes: int
    flags: tuple = ()
    m_j: float | None = None

    def __post_init__(self):
        if not 0 <= self.l < self.n:
            raise ValueError(f"need 0 <= l < n, got l={self.l}, n={self.n}")
        if abs(abs(self.j - self.l) - 0.5) > 1e-9:
            raise ValueError(f"|j - l| must be 1/2, got l={self.l}, j={self.j}")
        if self.m_j is not None and abs(self.m_j) > self.j + 1e-9:
            raise ValueError(f"|m_j| <= j violated: {self.m_j} > {self.j}")
        self.chi.setflags(write=False)

    def with_m_j(self, m_j: float) -> "RydbergState":
        return RydbergState(self.n, self.l, self.j, self.energy, self.grid,
                            self.chi, self.nodes, self.flags, m_j)

    def u_of_r(self) -> tuple[np.ndarray, np.ndarray]:
        """(r, u = r psi) for plotting/inspection."""
        xi = self.grid.xi
        return xi * xi, self.chi * np.sqrt(xi)


def model_potential(p: SpeciesParams, l: int, j: float, r) -> float | np.ndarray:
    """V(r) = V_core + V_polarization + V_spin-orbit, atomic units."""
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise ValueError("model potential requires r > 0")
    a1, a2, a3, a4, rc = p.potential_for(l)
    z = 1.0 + (p.Z - 1.0) * np.exp(-a1 * r) - r * (a3 + a4 * r) * np.exp(-a2 * r)
    v = -z / r
    if p.alpha_c:
        v = v - p.alpha_c / (2.0 * r**4) * (1.0 - np.exp(-((r / rc) ** 6)))
    if p.so_scale:
        ls = 0.5 * (j * (j + 1.0) - l * (l + 1.0) - 0.75)
        v = v + p.so_scale * FINE_STRUCTURE**2 / (2.0 * r**3) * ls
    return v if v.ndim else float(v)


def qd_energy(p: SpeciesParams, n: int, l: int, j: float) -> float:
    """E = -1/(2 (n - delta)^2) with the Rydberg-Ritz defect
    delta(n) = d0 + d2/(n-d0)^2 + d4/(n-d0)^4 + ..."""
    if n <= l:
        raise ValueError(f"need n > l, got n={n}, l={l}")
    series = p.defect_series(l, j)
    if series is None:
        warnings.warn(
            f"{p.name}: no defect series for (l={l}, j={j}); using delta=0",
            stacklevel=2)
        delta = 0.0
    else:
        d0 = series[0]
        delta = d0
        for k, dk in enumerate(series[1:], start=1):
            delta += dk / (n - d0) ** (2 * k)
    nstar = n - delta
    return -0.5 / (nstar * nstar)


def _numerov_inward(W: np.ndarray, h: float) -> np.ndarray:
    """Integrate chi'' = W chi from the outer end; seeds set the tail scale."""
    a = 1.0 - (h * h / 12.0) * W
    chi = np.empty_like(W)
    chi[-1] = 1e-12
    chi[-2] = 2e-12
    for i in range(len(W) - 2, 0, -1):
        chi[i - 1] = ((12.0 - 10.0 * a[i]) * chi[i] - a[i + 1] * chi[i + 1]) / a[i - 1]
        if abs(chi[i - 1]) > 1e250:   # rescale long tails before they overflow
            chi[i - 1:] *= 1e-250
    return chi


def solve_radial(p: SpeciesParams, n: int, l: int, j: float,
                 grid: RadialGrid | None = None,
                 energy: float | None = None) -> RydbergState:
    """Inward Numerov solve at the quantum-defect energy.

    Returns the normalized state with node count and diagnostic flags:
    'divergent-core' when the inner solution regrew under the barrier and was
    truncated, 'node-count' when the count disagrees with n - l - 1.
    """
    if grid is None:
        grid = default_grid(n)
    if energy is None:
        energy = qd_energy(p, n, l, j)
    xi = grid.xi
    h = grid.h
    r = xi * xi
    W = 8.0 * xi * xi * (model_potential(p, l, j, r) - energy) \
        + (2 * l + 0.5) * (2 * l + 1.5) / (xi * xi)
    chi = _numerov_inward(W, h)

    flags: list[str] = []
    # Truncate an inner blow-up.  Inside the innermost crossing the physical
    # solution decays toward r -> 0 (the Langer term keeps W > 0 at the
    # boundary), so |chi| growing monotonically INTO the boundary by over an
    # order of magnitude marks the spurious branch picked up because E is not
    # an exact eigenvalue; zero it through its minimum so a contamination
    # crossing is not counted as a node.
    sign_change = np.nonzero(chi[:-1] * chi[1:] < 0.0)[0]
    if sign_change.size and sign_change[0] < 3:
        # a crossing within a couple of samples of the cutoff is the
        # irregular branch leaking into the boundary value, not a node the
        # grid could resolve; blank it (amplitude there is ~1e-8 of the peak)
        chi = chi.copy()
        chi[: int(sign_change[0]) + 1] = 0.0
        sign_change = np.nonzero(chi[:-1] * chi[1:] < 0.0)[0]
    seg_end = int(sign_change[0]) + 1 if sign_change.size else chi.size
    inner = np.abs(chi[:seg_end])
    imin = int(np.argmin(inner))
    if imin > 0 and inner[0] >= inner[: imin + 1].max() \
            and inner[0] > 10.0 * inner[imin]:
        chi = chi.copy()
        chi[: imin + 1] = 0.0
        flags.append("divergent-core")

    nodes = int(np.count_nonzero(chi[:-1] * chi[1:] < 0.0))
    if nodes != n - l - 1:
        flags.append("node-count")

    norm2 = 2.0 * simpson(chi * chi * xi * xi, x=xi)
    chi = chi / math.sqrt(norm2)
    return RydbergState(n=n, l=l, j=j, energy=energy, grid=grid, chi=chi,
                        nodes=nodes, flags=tuple(flags))


def _common_chi(f: RydbergState, i: RydbergState):
    """Overlay two states on one xi grid (grids share r_min and step here;
    only the outer cutoff differs between principal quantum numbers)."""
    gf, gi = f.grid, i.grid
    if gf == gi:
        return gf.xi, f.chi, i.chi
    if abs(gf.h - gi.h) > 1e-12 or abs(gf.r_min - gi.r_min) > 1e-15:
        raise ValueError("states live on incompatible grids (r_min/step differ)")
    nshort = min(f.chi.size, i.chi.size)
    longer = f if f.chi.size > i.chi.size else i
    # the longer state must carry no weight in the clipped tail
    tail = 2.0 * np.sum(longer.chi[nshort:] ** 2
                        * longer.grid.xi[nshort:] ** 2) * longer.grid.h
    if tail > 1e-8:
        raise ValueError(f"grid overlap clips {tail:.1e} of the norm; "
                         "resolve the states on a common grid")
    xi = (gf if f.chi.size <= i.chi.size else gi).xi
    return xi, f.chi[:nshort], i.chi[:nshort]


def radial_matrix_element(f: RydbergState, i: RydbergState,
                          alpha: int, w_r: float) -> float:
    """<f| r (r/w_r)^{alpha-1} |i> = w_r^{1-alpha} * 2 int chi_f chi_i xi^{2alpha+2} dxi."""
    if alpha < 1:
        raise ValueError("alpha must be a positive integer")
    if w_r <= 0:
        raise ValueError("w_r must be positive")
    xi, cf, ci = _common_chi(f, i)
    val = 2.0 * simpson(cf * ci * xi ** (2 * alpha + 2), x=xi)
    return val / w_r ** (alpha - 1)


def load_species(name_or_path: str) -> SpeciesParams:
    """Resolve a species argument: a path wins; otherwise the packaged data."""
    cand = Path(name_or_path)
    if cand.is_file():
        return SpeciesParams.from_file(cand)
    packaged = Path(__file__).parent / "data" / f"{name_or_path.lower()}.species"
    if packaged.is_file():
        return SpeciesParams.from_file(packaged)
    raise FileNotFoundError(
        f"species {name_or_path!r}: no such file and no packaged data entry")
