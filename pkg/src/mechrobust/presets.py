"""Ready-made experiment grids for the standard robustness studies.

Each function returns an :class:`ExperimentConfig`; pass ``replicas`` or
``base_seed`` to override the defaults (30 replicas, seed 0).
"""
from __future__ import annotations

from .experiment import CouplingEntry, ExperimentConfig, NetworkSource
from .coupling import CouplingSpec

ALL_STRATEGIES = ("degree", "betweenness", "closeness", "random")
RANDOM_LEVELS = (0.1, 0.2, 0.5)
SW_SIZES = (95, 233, 470)


def _modular(label, p):
    return NetworkSource(label, "modular", {"n": 100, "m_modules": 5, "base_density": 1.0, "p": p})


def _sf(n):
    return NetworkSource(f"SF{n}", "scale_free", {"n": n, "m_attach": 2})


def _random_levels():
    return tuple(CouplingEntry(f"{round(q * 100)}%", CouplingSpec("random", q=q)) for q in RANDOM_LEVELS)


def _motifs():
    motifs = tuple(CouplingEntry(k.capitalize(), CouplingSpec("motif", kind=k)) for k in ("bus", "ring", "star"))
    # random bits at the bus/star stamp density
    return motifs + (CouplingEntry("Random", CouplingSpec("matched_random", kind="bus")),)


def _config(name, replicas, base_seed, **kw):
    return ExperimentConfig(strategies=ALL_STRATEGIES, replicas=replicas, base_seed=base_seed, name=name, **kw)


def modular_hardware(replicas=30, base_seed=0):
    """100-node, 5-module networks at rewiring p = 0, 0.2, 0.5, 0.8.

    Clique modules leave betweenness identically zero at p = 0, so ties are
    broken at random here rather than by lowest id.
    """
    hw = tuple(_modular(f"p={p}", p) for p in (0.0, 0.2, 0.5, 0.8))
    return _config("modular_hardware", replicas, base_seed, hw=hw, sw=(), coupling=(), tie_break="random")


def pw_engine(dsm_path, replicas=30, base_seed=0):
    """The Pratt & Whitney engine DSM on its own (file supplied by the user)."""
    hw = (NetworkSource("PW", "dsm", {"path": str(dsm_path)}),)
    return _config("pw_engine", replicas, base_seed, hw=hw, sw=(), coupling=())


def scale_free_software(replicas=30, base_seed=0):
    sw = tuple(_sf(n) for n in SW_SIZES)
    return _config("scale_free_software", replicas, base_seed, hw=(), sw=sw, coupling=())


def random_integration_modular(replicas=30, base_seed=0):
    """Modular and hierarchical-modular (p=0.5) HW with a 470-node SW network."""
    hw = (_modular("Modular", 0.0), _modular("HM", 0.5))
    return _config("random_integration_modular", replicas, base_seed,
                   hw=hw, sw=(_sf(470),), coupling=_random_levels())


def random_integration_pw(replicas=30, base_seed=0, hw=None):
    """54-node engine network coupled at random to SW networks of 95/233/470 nodes."""
    hw = hw or NetworkSource("PW", "pw_standin")
    return _config("random_integration_pw", replicas, base_seed,
                   hw=(hw,), sw=tuple(_sf(n) for n in SW_SIZES), coupling=_random_levels())


def motif_integration_modular(replicas=30, base_seed=0):
    hw = (_modular("Modular", 0.0), _modular("HM", 0.5))
    return _config("motif_integration_modular", replicas, base_seed,
                   hw=hw, sw=(_sf(470),), coupling=_motifs())


def motif_integration_pw(replicas=30, base_seed=0, hw=None):
    hw = hw or NetworkSource("PW", "pw_standin")
    return _config("motif_integration_pw", replicas, base_seed,
                   hw=(hw,), sw=(_sf(233),), coupling=_motifs())


PRESETS = {
    "table2": modular_hardware,
    "table4": scale_free_software,
    "table5": random_integration_modular,
    "table6": random_integration_pw,
    "table7": motif_integration_modular,
    "table8": motif_integration_pw,
}
