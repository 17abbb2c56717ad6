"""JSON Schemas for every machine-readable output."""

SCALAR = {"type": "string", "pattern": r"^(0|-?[0-9q].*)$"}

GENERATOR = {
    "type": "array",
    "minItems": 2,
    "maxItems": 3,
    "prefixItems": [
        {"enum": ["A", "ADag", "Alpha", "AlphaStar", "Beta", "BetaStar", "F", "FStar"]},
    ],
    "items": {"type": ["string", "integer"]},
}

WORD = {"type": "array", "items": GENERATOR}

ELEMENT = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["coeff", "word"],
        "additionalProperties": False,
        "properties": {"coeff": SCALAR, "word": WORD},
    },
}

TENSOR = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["coeff", "legs"],
        "additionalProperties": False,
        "properties": {"coeff": SCALAR, "legs": {"type": "array", "minItems": 1, "items": WORD}},
    },
}

REPORT = {
    "type": "object",
    "required": ["suite", "lattice", "checks", "status"],
    "properties": {
        "suite": {"type": "string"},
        "lattice": {"type": "integer", "minimum": 1},
        "variant": {"type": "string"},
        "status": {"enum": ["pass", "fail"]},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "status", "residual", "ms"],
                "additionalProperties": False,
                "properties": {
                    "id": {"type": "string"},
                    "status": {"enum": ["pass", "fail"]},
                    "residual": {"anyOf": [{"type": "null"}, ELEMENT, TENSOR]},
                    "ms": {"type": "number"},
                },
            },
        },
    },
}

REPORT_LIST = {"type": "array", "items": REPORT}

NORMALIZE = {
    "type": "object",
    "required": ["command", "lattice", "algebra", "input", "result"],
    "properties": {
        "command": {"const": "normalize"},
        "lattice": {"type": "integer"},
        "algebra": {"enum": ["osc", "group"]},
        "input": {"type": "string"},
        "result": ELEMENT,
    },
}

COPRODUCT = {
    "type": "object",
    "required": ["command", "lattice", "generator", "result"],
    "properties": {
        "command": {"const": "coproduct"},
        "lattice": {"type": "integer"},
        "generator": {"type": "string"},
        "result": TENSOR,
    },
}

RULES = {
    "type": "object",
    "required": ["lattice", "algebra", "rules"],
    "properties": {
        "lattice": {"type": "integer"},
        "algebra": {"enum": ["osc", "group"]},
        "rules": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["pattern", "replacement", "relation"],
                "properties": {
                    "pattern": {"type": "array", "minItems": 2, "maxItems": 2, "items": GENERATOR},
                    "replacement": ELEMENT,
                    "relation": {"type": "string"},
                },
            },
        },
    },
}
