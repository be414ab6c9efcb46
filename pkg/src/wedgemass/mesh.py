"""Mesh documents and global (scalar, per-node) mass assembly."""

import json
import logging
from dataclasses import dataclass, field

import numpy as np

from .element import WedgeElement
from .errors import InvalidElementError, MeshError
from .mass import KINDS, Scheme, element_masses

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Mesh:
    node_ids: tuple            # document order defines the global index
    coords: np.ndarray         # (N, 3)
    connectivity: np.ndarray   # (E, 6) global indices, Fig.-1 node order
    density: float
    invalid: tuple = field(default=())   # InvalidElementError per bad element

    @property
    def element_nodes(self):
        return self.coords[self.connectivity]

    def element(self, k):
        return WedgeElement(self.element_nodes[k], self.density)


def _load(document):
    if isinstance(document, (str, bytes, bytearray)):
        try:
            return json.loads(document)
        except json.JSONDecodeError as exc:
            raise MeshError(f"malformed mesh document: {exc}") from None
    return document


def _number(value, what):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise MeshError(f"{what} must be a number, got {value!r}")
    value = float(value)
    if not np.isfinite(value):
        raise MeshError(f"{what} must be finite")
    return value


def parse_mesh(document, strict=False):
    """Validate a mesh document (JSON text or already-decoded dict).

    Expected fields: ``nodes`` (list of ``{id, x, y, z}``), ``elements``
    (list of 6-id lists) and ``density`` (> 0). Elements whose metric is not
    positive at every EX sample are logged as warnings and kept in
    ``Mesh.invalid``; with ``strict=True`` the first one raises.
    """
    doc = _load(document)
    if not isinstance(doc, dict):
        raise MeshError("mesh document must be a JSON object")
    for key in ("nodes", "elements", "density"):
        if key not in doc:
            raise MeshError(f"mesh document is missing {key!r}")

    density = _number(doc["density"], "density")
    if density <= 0:
        raise MeshError(f"density must be positive, got {density}")

    nodes = doc["nodes"]
    if not isinstance(nodes, list) or not nodes:
        raise MeshError("'nodes' must be a non-empty list")
    index = {}
    coords = []
    for k, node in enumerate(nodes):
        if not isinstance(node, dict) or not {"id", "x", "y", "z"} <= node.keys():
            raise MeshError(f"node {k} must be an object with id, x, y, z")
        nid = node["id"]
        if isinstance(nid, (list, dict, float)) or nid is None:
            raise MeshError(f"node {k}: id must be an integer or string, got {nid!r}")
        if nid in index:
            raise MeshError(f"duplicate node id {nid!r}")
        index[nid] = k
        coords.append([_number(node[c], f"node {nid!r} {c}") for c in "xyz"])

    elements = doc["elements"]
    if not isinstance(elements, list) or not elements:
        raise MeshError("'elements' must be a non-empty list")
    conn = []
    for k, elem in enumerate(elements):
        if not isinstance(elem, list) or len(elem) != 6:
            raise MeshError(f"element {k} must list exactly 6 node ids")
        row = []
        for nid in elem:
            if isinstance(nid, (list, dict)) or nid not in index:
                raise MeshError(f"element {k} references unknown node id {nid!r}")
            row.append(index[nid])
        conn.append(row)

    coords = np.array(coords, dtype=float)
    connectivity = np.array(conn, dtype=np.int64)
    invalid = []
    for k in range(len(connectivity)):
        e = WedgeElement(coords[connectivity[k]], density)
        bad = e.first_invalid_point()
        if bad is not None:
            sample, point = bad
            err = InvalidElementError(k, sample, point, float(e.ex_sample_metrics()[sample]))
            if strict:
                raise err
            log.warning("%s", err)
            invalid.append(err)
    return Mesh(tuple(index), coords, connectivity, density, tuple(invalid))


def read_mesh(path, strict=False):
    with open(path) as fh:
        return parse_mesh(fh.read(), strict=strict)


@dataclass(frozen=True)
class GlobalMassMatrix:
    """Upper-triangle triplets (row <= col) of the scalar global mass matrix."""

    node_ids: tuple
    rows: np.ndarray
    cols: np.ndarray
    values: np.ndarray
    scheme: str = ""
    kind: str = "consistent"

    @property
    def size(self):
        return len(self.node_ids)

    def to_sparse(self):
        import scipy.sparse as sp

        n = self.size
        upper = sp.coo_matrix((self.values, (self.rows, self.cols)), shape=(n, n))
        strict = sp.triu(upper, k=1)
        return (upper + strict.T).tocsr()

    def to_dense(self):
        return self.to_sparse().toarray()

    def total_mass(self):
        off = self.rows != self.cols
        return float(self.values.sum() + self.values[off].sum())

    def triplets(self):
        """(row id, col id, value) in row-major order."""
        ids = self.node_ids
        return [(ids[r], ids[c], float(v)) for r, c, v in zip(self.rows, self.cols, self.values)]


def assemble_global(mesh, scheme, kind="consistent"):
    # deferred: scipy.sparse costs ~0.1 s at import and only assembly needs it
    import scipy.sparse as sp

    scheme = Scheme.parse(scheme)
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    blocks = element_masses(mesh.element_nodes, scheme, kind, mesh.density)
    n = len(mesh.node_ids)
    conn = mesh.connectivity
    if kind == "consistent":
        r = np.repeat(conn, 6, axis=1).ravel()
        c = np.tile(conn, (1, 6)).ravel()
        v = blocks.reshape(len(conn), 36).ravel()
    else:
        r = c = conn.ravel()
        v = blocks.ravel()
    # csr conversion sums duplicates in input order, so bytes are reproducible
    full = sp.coo_matrix((v, (r, c)), shape=(n, n)).tocsr()
    upper = sp.triu(full).tocoo()
    order = np.lexsort((upper.col, upper.row))
    return GlobalMassMatrix(tuple(mesh.node_ids), upper.row[order].astype(np.int64),
                            upper.col[order].astype(np.int64), upper.data[order],
                            scheme.value, kind)
