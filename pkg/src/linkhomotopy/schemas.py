"""JSON schemas for every document the library and CLI emit."""

from __future__ import annotations

import jsonschema

INT_STRING = {"type": "string", "pattern": r"^-?\d+$"}
RATIONAL_STRING = {"type": "string", "pattern": r"^-?\d+/\d+$"}
INT_LIST = {"type": "array", "items": {"type": "integer"}}

NCPOLY = {
    "type": "array",
    "items": {
        "type": "object",
        "properties": {"monomial": INT_LIST, "coeff": INT_STRING},
        "required": ["monomial", "coeff"],
        "additionalProperties": False,
    },
}

NORMAL_FORM = {
    "type": "object",
    "properties": {
        "n": {"type": "integer"},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"I": INT_LIST, "sigma": INT_LIST, "e": INT_STRING},
                "required": ["I", "sigma", "e"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["n", "terms"],
}

MU_VECTOR = {
    "type": "object",
    "properties": {
        "n": {"type": "integer"},
        "mu": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"sigma": INT_LIST, "value": INT_STRING},
                "required": ["sigma", "value"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["n", "mu"],
}

KAPPA = {
    "type": "object",
    "properties": {
        "n": {"type": "integer"},
        "kappa": MU_VECTOR["properties"]["mu"],
    },
    "required": ["n", "kappa"],
}

MU_TABLE = {
    "type": "object",
    "properties": {
        "n": {"type": "integer"},
        "word": {"type": "string"},
        "mu": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"I": INT_LIST, "value": INT_STRING},
                "required": ["I", "value"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["n", "mu"],
}

LIE_ELT = {
    "type": "array",
    "items": {
        "type": "object",
        "properties": {"lyndon_word": INT_LIST, "coeff": RATIONAL_STRING},
        "required": ["lyndon_word", "coeff"],
        "additionalProperties": False,
    },
}

REPORT = {
    "type": "object",
    "properties": {
        "n": {"type": "integer"},
        "trials": {"type": "integer"},
        "failures": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "seed_index": {"type": "integer"},
                    "e": {"type": "array", "items": INT_STRING},
                    "mu": {"type": "array", "items": INT_STRING},
                },
                "required": ["seed_index", "e", "mu"],
            },
        },
        "elapsed_ms": {"type": "number"},
    },
    "required": ["n", "trials", "failures"],
}

BRUNNIAN = {
    "type": "object",
    "properties": {
        "n": {"type": "integer"},
        "word": {"type": "string"},
        "brunnian": {"type": "boolean"},
        "witness": {"type": ["integer", "null"]},
    },
    "required": ["n", "brunnian", "witness"],
}

DIMS = {
    "type": "object",
    "properties": {
        "n": {"type": "integer"},
        "quotient_rank": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"k": {"type": "integer"}, "rank": INT_STRING, "formula": INT_STRING},
                "required": ["k", "rank", "formula"],
            },
        },
        "multilinear_dim": {"anyOf": [INT_STRING, {"type": "null"}]},
        "btf_kernel_rank": {"anyOf": [INT_STRING, {"type": "null"}]},
        "expected": {"anyOf": [INT_STRING, {"type": "null"}]},
    },
    "required": ["n", "quotient_rank"],
}

FOUR_T = {
    "type": "object",
    "properties": {
        "n": {"type": "integer"},
        "holds": {"type": "boolean"},
        "instances": {"type": "integer"},
        "failures": {"type": "array"},
    },
    "required": ["n", "holds"],
}

VERIFY = {
    "type": "object",
    "properties": {
        "n": {"type": "integer"},
        "trials": {"type": "integer"},
        "seed": {"type": "integer"},
        "rng": {"type": "string"},
        "failures": REPORT["properties"]["failures"],
        "main_theorem": REPORT,
        "suites": {"type": "object"},
        "ok": {"type": "boolean"},
    },
    "required": ["n", "trials", "seed", "rng", "failures", "main_theorem", "suites", "ok"],
}

SCHEMAS = {
    "ncpoly": NCPOLY,
    "normal_form": NORMAL_FORM,
    "mu_vector": MU_VECTOR,
    "kappa": KAPPA,
    "mu_table": MU_TABLE,
    "lie_elt": LIE_ELT,
    "report": REPORT,
    "brunnian": BRUNNIAN,
    "dims": DIMS,
    "fourT": FOUR_T,
    "verify": VERIFY,
}


def validate(kind: str, document) -> None:
    jsonschema.validate(document, SCHEMAS[kind])
