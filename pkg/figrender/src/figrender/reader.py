"""CSV reading and schema validation."""

import numpy as np

SCHEMA = (
    "t", "e_total", "e_kin", "e_pot", "e_kin_mod", "work_rate", "heat_rate",
    "entropy", "entropy_rate", "entropy_flow_rate", "entropy_production_rate",
    "free_energy", "purity", "coherence", "distance",
)


class SchemaError(ValueError):
    """The CSV header does not match the expected column schema."""


def read_series(path):
    """Parse one run CSV into a dict of column name -> float array.

    The header must match the schema exactly, in order; the first
    mismatching column is named in the error.
    """
    with open(path) as fh:
        header = fh.readline().strip()
        columns = header.split(",")
        if len(columns) != len(SCHEMA):
            raise SchemaError(
                f"{path}: expected {len(SCHEMA)} columns, found {len(columns)}"
            )
        for expected, found in zip(SCHEMA, columns):
            if expected != found:
                raise SchemaError(
                    f"{path}: expected column {expected!r}, found {found!r}"
                )
        data = np.loadtxt(fh, delimiter=",", ndmin=2)
    if data.shape[1] != len(SCHEMA):
        raise SchemaError(f"{path}: data rows have {data.shape[1]} fields")
    return {name: data[:, k] for k, name in enumerate(SCHEMA)}
