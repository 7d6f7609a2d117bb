"""Named starting seeds shared by the command line, the server and the
tests.

A preset spec is ``name`` or ``name:args`` with comma-separated integer
args, e.g. ``b2``, ``quadric:5``, ``rectangles:3,7``. Resolving a spec
yields the seed plus per-label layout hints for drawing the quiver.
"""

from .errors import StructureError
from .models.grid import grid_seed_k4
from .models.quadric import quadric_seed
from .models.rectangles import rect_vertices, rectangles_seed
from .models.transport import mat_k
from .models.wiring import interval_vertices, special_wiring_seed
from .quiver import ExtendedExchangeMatrix, q_abc
from .seeds import initial_seed


class PresetError(ValueError):
    """Unknown preset name or malformed arguments."""


class ResolvedPreset:
    __slots__ = ("spec", "description", "seed", "layout")

    def __init__(self, spec, description, seed, layout):
        self.spec = spec
        self.description = description
        self.seed = seed
        self.layout = layout


def _rank2_layout(names):
    return {names[0]: [0.0, 0.0], names[1]: [1.0, 0.0]}


def _a2():
    B = ExtendedExchangeMatrix([[0, 1], [-1, 0]])
    seed = initial_seed(B, ["x1", "x2"])
    return seed, _rank2_layout(["x1", "x2"])


def _b2():
    B = ExtendedExchangeMatrix([[0, 1], [-2, 0]], d=(2, 1))
    seed = initial_seed(B, ["z1", "z2"])
    return seed, _rank2_layout(["z1", "z2"])


def _qabc(a, b, c):
    seed = initial_seed(q_abc(a, b, c), ["x1", "x2", "x3"])
    layout = {"x1": [0.0, 0.0], "x2": [2.0, 0.0], "x3": [1.0, 1.5]}
    return seed, layout


def _markov():
    return _qabc(2, 2, 2)


def _quadric(k):
    model = quadric_seed(k)
    seed = model.seed
    n = seed.matrix.n
    layout = {}
    for idx, lab in enumerate(seed.labels):
        if idx < n:
            layout[lab] = [float(idx), 0.0]
        else:
            layout[lab] = [float(idx - n), 1.5]
    return seed, layout


def _rectangles(a, b):
    model = rectangles_seed(a, b)
    seed = model.bound_seed()
    mutable, frozen = rect_vertices(a, b)
    layout = {
        lab: [float(j), float(i)]
        for (i, j), lab in zip(mutable + frozen, seed.labels)
    }
    return seed, layout


def _wiring(k):
    model = special_wiring_seed(k)
    seed = model.bound_seed()
    mutable, frozen = interval_vertices(k)
    layout = {
        lab: [(b + c) / 2.0, float(c - b)]
        for (b, c), lab in zip(mutable + frozen, seed.labels)
    }
    return seed, layout


def _mat(k):
    model = mat_k(k)
    seed = model.bound_seed()
    mutable, frozen = rect_vertices(k, 2 * k)
    layout = {
        lab: [float(j), float(i)]
        for (i, j), lab in zip(mutable + frozen, seed.labels)
    }
    return seed, layout


def _grid4():
    model = grid_seed_k4()
    seed = model.bound_seed()
    layout = {}
    for lab in seed.labels:
        rows, cols = lab[1:].split("_")
        x = sum(int(ch) for ch in cols) / len(cols)
        y = sum(int(ch) for ch in rows) / len(rows)
        layout[lab] = [x, y]
    return seed, layout


def _int_args(name, parts, want):
    if len(parts) != want:
        raise PresetError(
            f"preset {name} takes {want} integer argument(s), got {len(parts)}"
        )
    out = []
    for p in parts:
        try:
            out.append(int(p))
        except ValueError:
            raise PresetError(f"preset {name}: bad integer {p!r}") from None
    return out


_CATALOG = [
    ("a2", 0, "rank 2, arrows 1 and 1: five seeds, five variables", _a2),
    ("b2", 0, "rank 2, arrows 1 and 2: six seeds, six variables", _b2),
    ("markov", 0, "three-cycle with double arrows; never acyclic", _markov),
    ("qabc", 3, "three-cycle with arrow multiplicities a, b, c", _qabc),
    ("quadric", 1, "hypercube seeds on a smooth quadric, 2k variables",
     _quadric),
    ("rectangles", 2, "column sets of an a-by-b matrix along staircase "
     "paths, bound to maximal minors", _rectangles),
    ("grassmannian", 2, "alias of rectangles", _rectangles),
    ("wiring", 1, "intervals of 1..k bound to initial flag minors",
     _wiring),
    ("mat_k", 1, "rectangles seed for a=k, b=2k bound to minors of a "
     "square matrix", _mat),
    ("grid4", 0, "grid of 16 solid minors of a 4-by-4 matrix", _grid4),
]

_BY_NAME = {name: (argc, desc, fn) for name, argc, desc, fn in _CATALOG}


def preset_names():
    """Catalog rows: (name, number of integer args, description)."""
    return [(name, argc, desc) for name, argc, desc, _ in _CATALOG]


def resolve_preset(spec):
    """Build the seed (and layout hints) a preset spec names."""
    parts = spec.strip().split(":")
    name = parts[0]
    if name not in _BY_NAME:
        known = ", ".join(sorted(_BY_NAME))
        raise PresetError(f"unknown preset {name!r} (known: {known})")
    argc, desc, fn = _BY_NAME[name]
    raw = parts[1].split(",") if len(parts) > 1 else []
    if len(parts) > 2:
        raise PresetError(f"preset {name}: too many ':' groups")
    args = _int_args(name, raw, argc)
    try:
        seed, layout = fn(*args)
    except PresetError:
        raise
    except (ValueError, StructureError) as exc:
        raise PresetError(f"preset {spec}: {exc}") from None
    canonical = name if not args else name + ":" + ",".join(map(str, args))
    return ResolvedPreset(canonical, desc, seed, layout)


def sample_specs():
    """Concrete instances the server offers as a starting menu."""
    return [
        "a2",
        "b2",
        "markov",
        "qabc:1,1,1",
        "quadric:5",
        "rectangles:2,5",
        "rectangles:3,6",
        "rectangles:3,7",
        "wiring:4",
        "wiring:5",
        "mat_k:2",
        "grid4",
    ]
