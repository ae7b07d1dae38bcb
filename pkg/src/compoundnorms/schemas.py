"""JSON Schemas (draft 2020-12) for every ``--json`` output of the CLI."""

_NUM = {"type": "number"}
_NUM_OR_NULL = {"type": ["number", "null"]}
_NORM = {"enum": ["L1", "L2", "LInf"]}

THETA = {
    "type": "object",
    "required": ["kind", "value"],
    "properties": {"kind": {"enum": ["Exact", "UpperBound"]}, "value": _NUM},
    "additionalProperties": False,
}

_REPORT_CORE = {
    "quantity": _NUM,
    "bound": _NUM,
    "ratio": _NUM_OR_NULL,
    "theta": THETA,
    "side": {"enum": ["Columns", "Rows", "MinOfBoth"]},
    "winner": {"enum": ["Columns", "Rows"]},
    "tight": {"type": "boolean"},
    "columns": _NUM,
    "rows": _NUM_OR_NULL,
    "n": {"type": "integer", "minimum": 1},
    "k": {"type": "integer", "minimum": 1},
}

BOUND = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "compound norm bound report",
    "type": "object",
    "required": list(_REPORT_CORE) + ["mu", "nu", "holds"],
    "properties": {**_REPORT_CORE, "mu": _NORM, "nu": _NORM, "holds": {"type": "boolean"}},
    "additionalProperties": False,
}

EIGBOUND = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "eigenvalue product bound report",
    "type": "object",
    "required": list(_REPORT_CORE) + ["norm", "holds", "mode"],
    "properties": {
        **_REPORT_CORE,
        "norm": _NORM,
        "holds": {"type": "boolean"},
        "mode": {"enum": ["largest", "smallest"]},
        "lower_bound": _NUM,
        "smallest_product": _NUM,
    },
    "additionalProperties": False,
}

COMPOUND = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "compound matrix summary",
    "type": "object",
    "required": ["n", "k", "size", "norms"],
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "k": {"type": "integer", "minimum": 1},
        "size": {"type": "integer", "minimum": 1},
        "norms": {
            "type": "object",
            "required": ["L1", "L2", "LInf"],
            "properties": {"L1": _NUM, "L2": _NUM, "LInf": _NUM},
            "additionalProperties": False,
        },
        "out": {"type": ["string", "null"]},
    },
    "additionalProperties": False,
}

EXTREMAL = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "extremal matrix certificate",
    "type": "object",
    "required": ["family", "n", "certificate"],
    "properties": {
        "family": {"enum": ["monomial", "fourier", "hadamard", "first-row-ones", "psd-theta2"]},
        "n": {"type": "integer", "minimum": 1},
        "k": {"type": ["integer", "null"]},
        "certificate": {"type": "object"},
        "out": {"type": ["string", "null"]},
    },
    "additionalProperties": False,
}

_PROPERTY = {
    "type": "object",
    "required": ["pass", "fail", "enforced", "worst_ratio", "worst_ratio_by_class", "counterexamples"],
    "properties": {
        "pass": {"type": "integer", "minimum": 0},
        "fail": {"type": "integer", "minimum": 0},
        "enforced": {"type": "boolean"},
        "worst_ratio": _NUM_OR_NULL,
        "worst_ratio_by_class": {"type": "object", "additionalProperties": _NUM},
        "counterexamples": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["property", "check", "class", "n", "sample", "k", "params", "matrix", "observed"],
            },
        },
    },
    "additionalProperties": False,
}

SWEEP = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "verification sweep report",
    "type": "object",
    "required": ["config", "backend", "samples", "ok", "violations", "numerical_failures", "properties"],
    "properties": {
        "config": {
            "type": "object",
            "required": ["n_min", "n_max", "samples_per_n", "seed", "classes", "tolerance"],
        },
        "backend": {"enum": ["cython", "python"]},
        "samples": {"type": "integer", "minimum": 0},
        "ok": {"type": "boolean"},
        "violations": {"type": "integer", "minimum": 0},
        "numerical_failures": {"type": "array"},
        "properties": {"type": "object", "additionalProperties": _PROPERTY},
    },
    "additionalProperties": False,
}

SCHEMAS = {
    "compound": COMPOUND,
    "bound": BOUND,
    "eigbound": EIGBOUND,
    "extremal": EXTREMAL,
    "verify": SWEEP,
}
