# Interchange format and checker identity.
FORMAT_VERSION = "1"
CHECKER_VERSION = "pyquadri-check/1"

# Configuration defaults.
DEFAULT_NAME = "pyquadri"
DEFAULT_STORAGE_DIR = "./"
DEFAULT_LANES = 1
DEFAULT_BUDGET = 100000
DEFAULT_ENTRIES = (-1, 0, 1)
DEFAULT_SEED = 0
DEFAULT_COEFFICIENT_BOUND = 3
DEFAULT_REPORT_FORMAT = "json"
CATALOG_SUFFIX = ".catalog.ndjson"

# Job priorities for the worker lanes.
PRIO_HIGH = 10
PRIO_NORMAL = 40
PRIO_LOW = 99

# CLI exit codes.
EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_ERROR = 2

# Operation names.
DD_OPS = ("prec", "succ")
QUADRI_OPS = ("nw", "ne", "sw", "se")
DERIVED_OPS = ("succ", "prec", "vee", "wedge", "star")
COMULTS = ("alpha", "beta", "alpha_t", "beta_t")

# Which base operations each derived operation sums.
QUADRI_SUMS = {
    "nw": ("nw",),
    "ne": ("ne",),
    "sw": ("sw",),
    "se": ("se",),
    "succ": ("ne", "se"),
    "prec": ("nw", "sw"),
    "vee": ("sw", "se"),
    "wedge": ("nw", "ne"),
    "star": ("nw", "ne", "sw", "se"),
}
DD_SUMS = {
    "prec": ("prec",),
    "succ": ("succ",),
    "star": ("prec", "succ"),
}

# Comultiplication dual to each quadri operation.
COMULT_OF = {
    "nw": "alpha",
    "ne": "beta",
    "sw": "alpha_t",
    "se": "beta_t",
}

# Axioms as (o1, o2, o3, o4) meaning (x o1 y) o2 z = x o3 (y o4 z).
DD_AXIOMS = (
    ("prec", "prec", "prec", "star"),
    ("succ", "prec", "succ", "prec"),
    ("star", "succ", "succ", "succ"),
)
QUADRI_AXIOMS = (
    ("nw", "nw", "nw", "star"),
    ("ne", "nw", "ne", "prec"),
    ("wedge", "ne", "ne", "succ"),
    ("sw", "nw", "sw", "wedge"),
    ("se", "nw", "se", "nw"),
    ("vee", "ne", "se", "ne"),
    ("prec", "sw", "sw", "vee"),
    ("succ", "sw", "se", "sw"),
    ("star", "se", "se", "se"),
)

# Leg placements of a two-leg tensor inside a three-leg one.
PLACEMENTS = ("12", "13", "23")

# Rota-Baxter families built on a double.
RB_FAMILIES = ("F1", "F2", "F3", "G1", "G2", "G3")
