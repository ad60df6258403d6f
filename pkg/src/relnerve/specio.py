"""Parsing of the diagram spec format and the line-oriented report writer.

The input is a single structured-text file; tokens are whitespace-separated
and ``#`` starts a comment.  The grammar is documented in the README.  All
names are mapped to dense indices; every error carries its line number.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fincat import CatDiagram, CatFunctor, FinCategory, SSetDiagram
from .marked import MarkedDiagram, MarkedSSet, mark
from .sset import (SimplicialMap, TruncSSet, build_generated, constant_map,
                   identity_map)


class SpecParseError(Exception):
    def __init__(self, message, line=None):
        self.line = line
        where = "" if line is None else " (line %d)" % line
        super().__init__(message + where)


@dataclass
class ParsedSpec:
    kind: str
    cap: int
    diagram: object              # SSetDiagram | CatDiagram | MarkedDiagram
    obj_names: list
    arrow_names: list


def _tokenize(text):
    rows = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            rows.append((ln, body.split()))
    return rows


def _to_int(tok, ln, what):
    try:
        return int(tok)
    except ValueError:
        raise SpecParseError("expected an integer %s, got %r" % (what, tok),
                             ln)


class _Cursor:
    def __init__(self, rows):
        self.rows = rows
        self.pos = 0

    def peek(self):
        return self.rows[self.pos] if self.pos < len(self.rows) else None

    def take(self):
        row = self.peek()
        if row is None:
            raise SpecParseError("unexpected end of file")
        self.pos += 1
        return row


def _parse_sset_block(cur, cap):
    counts = {}
    faces = {}
    degens = {}
    while True:
        ln, toks = cur.take()
        if toks[0] == "end":
            break
        if toks[0] == "count":
            counts[_to_int(toks[1], ln, "degree")] = \
                _to_int(toks[2], ln, "count")
        elif toks[0] == "face":
            n = _to_int(toks[1], ln, "degree")
            i = _to_int(toks[2], ln, "face index")
            faces[(n, i)] = ([_to_int(t, ln, "face entry")
                              for t in toks[3:]], ln)
        elif toks[0] == "degen":
            n = _to_int(toks[1], ln, "degree")
            i = _to_int(toks[2], ln, "degeneracy index")
            degens[(n, i)] = ([_to_int(t, ln, "degeneracy entry")
                               for t in toks[3:]], ln)
        else:
            raise SpecParseError("unknown directive %r in sset block"
                                 % toks[0], ln)
    clist = [counts.get(n, 0) for n in range(cap + 1)]
    ftabs = [None]
    for n in range(1, cap + 1):
        tabs = []
        for i in range(n + 1):
            if (n, i) not in faces:
                if clist[n]:
                    raise SpecParseError("missing face table %d %d" % (n, i))
                tabs.append([])
                continue
            row, ln = faces[(n, i)]
            if len(row) != clist[n] or \
                    any(v >= clist[n - 1] or v < 0 for v in row):
                raise SpecParseError("bad face table %d %d" % (n, i), ln)
            tabs.append(row)
        ftabs.append(tabs)
    dtabs = []
    for n in range(cap):
        tabs = []
        for i in range(n + 1):
            if (n, i) not in degens:
                if clist[n]:
                    raise SpecParseError(
                        "missing degeneracy table %d %d" % (n, i))
                tabs.append([])
                continue
            row, ln = degens[(n, i)]
            if len(row) != clist[n] or \
                    any(v >= clist[n + 1] or v < 0 for v in row):
                raise SpecParseError("bad degeneracy table %d %d" % (n, i),
                                     ln)
            tabs.append(row)
        dtabs.append(tabs)
    return TruncSSet(cap, clist, ftabs, dtabs)


def _parse_category_block(cur):
    objs = []
    arrows = []          # (name, src, tgt)
    composes = []        # (g, f, h) names
    while True:
        ln, toks = cur.take()
        if toks[0] == "end":
            break
        if toks[0] == "object":
            objs.extend(toks[1:])
        elif toks[0] == "arrow":
            arrows.append((toks[1], toks[2], toks[3], ln))
        elif toks[0] == "compose":
            composes.append((toks[1], toks[2], toks[3], ln))
        else:
            raise SpecParseError("unknown directive %r in category block"
                                 % toks[0], ln)
    return _build_category(objs, arrows, composes)


def _build_category(objs, arrows, composes):
    obj_index = {o: i for i, o in enumerate(objs)}
    names = ["id_%s" % o for o in objs]
    src = list(range(len(objs)))
    tgt = list(range(len(objs)))
    mor_index = {n: i for i, n in enumerate(names)}
    for (name, a, b, ln) in arrows:
        if a not in obj_index or b not in obj_index:
            raise SpecParseError("arrow %r references unknown object"
                                 % name, ln)
        if name in mor_index:
            raise SpecParseError("duplicate morphism name %r" % name, ln)
        mor_index[name] = len(names)
        names.append(name)
        src.append(obj_index[a])
        tgt.append(obj_index[b])
    identity = list(range(len(objs)))
    table = {}
    for m in range(len(names)):
        table[(m, identity[src[m]])] = m
        table[(identity[tgt[m]], m)] = m
    for (g, f, h, ln) in composes:
        for t in (g, f, h):
            if t not in mor_index:
                raise SpecParseError("compose references unknown morphism %r"
                                     % t, ln)
        table[(mor_index[g], mor_index[f])] = mor_index[h]
    C = FinCategory(len(objs), src, tgt, identity, table,
                    obj_names=objs, mor_names=names)
    return C, obj_index, mor_index


def parse_spec(text):
    """Parse and validate a diagram spec; raises SpecParseError on any
    defect, including category and functoriality violations."""
    cur = _Cursor(_tokenize(text))
    kind = None
    cap = None
    objs, arrows, composes = [], [], []
    value_defs = {}
    map_defs = {}
    markings = {}
    marked_extra = {}
    while cur.peek() is not None:
        ln, toks = cur.take()
        head = toks[0]
        if head == "diagram":
            kind = toks[1]
            if kind not in ("sset", "cat", "marked"):
                raise SpecParseError("unknown diagram kind %r" % kind, ln)
        elif head == "cap":
            cap = _to_int(toks[1], ln, "cap")
        elif head == "object":
            objs.extend(toks[1:])
        elif head == "arrow":
            arrows.append((toks[1], toks[2], toks[3], ln))
        elif head == "compose":
            composes.append((toks[1], toks[2], toks[3], ln))
        elif head == "value":
            name = toks[1]
            spec = toks[2:]
            if spec and spec[0] in ("explicit", "category"):
                block = _parse_sset_block(cur, cap) if spec[0] == "explicit" \
                    else _parse_category_block(cur)
                value_defs[name] = (spec[0], block, ln)
            else:
                value_defs[name] = ("generator", spec, ln)
        elif head == "map":
            name = toks[1]
            spec = toks[2:]
            if spec and spec[0] in ("explicit", "functor"):
                rows = []
                while True:
                    ln2, t2 = cur.take()
                    if t2[0] == "end":
                        break
                    rows.append((ln2, t2))
                map_defs[name] = (spec[0], rows, ln)
            else:
                map_defs[name] = ("short", spec, ln)
        elif head == "marking":
            markings[toks[1]] = (toks[2], ln)
        elif head == "marked":
            marked_extra.setdefault(toks[1], []).extend(
                _to_int(t, ln, "edge id") for t in toks[2:])
        else:
            raise SpecParseError("unknown directive %r" % head, ln)
    if kind is None:
        raise SpecParseError("missing 'diagram' line")
    if cap is None:
        raise SpecParseError("missing 'cap' line")
    C, obj_index, mor_index = _build_category(objs, arrows, composes)
    from .fincat import CatError, validate_category
    from .marked import MarkError
    bad = validate_category(C)
    if bad:
        raise SpecParseError("shape is not a category: %r" % (bad[0],))
    try:
        if kind == "cat":
            diagram = _assemble_cat(C, obj_index, mor_index, value_defs,
                                    map_defs, objs)
        else:
            diagram = _assemble_sset(C, obj_index, mor_index, value_defs,
                                     map_defs, objs, cap)
            if kind == "marked":
                diagram = _apply_markings(diagram, obj_index, markings,
                                          marked_extra)
    except (CatError, MarkError, KeyError, IndexError) as exc:
        raise SpecParseError("invalid diagram data: %r" % (exc,))
    arrow_names = [n for n in C.mor_names]
    bad = diagram.validate()
    if bad:
        raise SpecParseError("diagram is not functorial: %r" % (bad[0],))
    return ParsedSpec(kind, cap, diagram, objs, arrow_names)


def _value_sset(defn, cap, name):
    tag, payload, ln = defn
    if tag == "explicit":
        return payload
    if tag == "generator":
        toks = payload
        if not toks:
            raise SpecParseError("empty value for %r" % name, ln)
        gkind = toks[0]
        if gkind == "delta":
            return build_generated("delta", cap, n=int(toks[1]))
        if gkind == "boundary":
            return build_generated("boundary", cap, n=int(toks[1]))
        if gkind == "horn":
            return build_generated("horn", cap, n=int(toks[1]),
                                   k=int(toks[2]))
        if gkind == "J":
            return build_generated("J", cap)
        if gkind == "point":
            return build_generated("point", cap)
        if gkind == "discrete":
            return build_generated("discrete", cap, n=int(toks[1]))
        if gkind == "nerve":
            raise SpecParseError("nerve values need a category block", ln)
        raise SpecParseError("unknown generator %r" % gkind, ln)
    raise SpecParseError("value %r is not a simplicial set" % name, ln)


def _assemble_sset(C, obj_index, mor_index, value_defs, map_defs, objs, cap):
    values = []
    for o in objs:
        if o not in value_defs:
            raise SpecParseError("missing value for object %r" % o)
        values.append(_value_sset(value_defs[o], cap, o))
    maps = []
    for m in range(C.n_morphisms):
        name = C.mor_names[m]
        a, b = C.src[m], C.tgt[m]
        if C.is_identity(m):
            maps.append(identity_map(values[a]))
            continue
        if name not in map_defs:
            raise SpecParseError("missing map for arrow %r" % name)
        tag, payload, ln = map_defs[name]
        if tag == "short":
            if payload[0] == "constant":
                maps.append(constant_map(values[a], values[b],
                                         int(payload[1])))
            elif payload[0] == "identity":
                maps.append(SimplicialMap(
                    values[a], values[b],
                    [list(range(values[a].counts[n]))
                     for n in range(cap + 1)]))
            else:
                raise SpecParseError("unknown map shorthand %r"
                                     % payload[0], ln)
        else:
            rows = {}
            for ln2, t2 in payload:
                if t2[0] != "row":
                    raise SpecParseError("expected 'row' in map block", ln2)
                rows[_to_int(t2[1], ln2, "degree")] = [
                    _to_int(v, ln2, "entry") for v in t2[2:]]
            comp = []
            for n in range(cap + 1):
                row = rows.get(n, [])
                if len(row) != values[a].counts[n]:
                    raise SpecParseError(
                        "map %r row %d has wrong length" % (name, n), ln)
                comp.append(row)
            maps.append(SimplicialMap(values[a], values[b], comp))
    return SSetDiagram(C, values, maps)


def _assemble_cat(C, obj_index, mor_index, value_defs, map_defs, objs):
    values = []
    indices = []
    for o in objs:
        if o not in value_defs or value_defs[o][0] != "category":
            raise SpecParseError("cat diagrams need a category block per "
                                 "object (missing %r)" % o)
        V, oi, mi = value_defs[o][1]
        values.append(V)
        indices.append((oi, mi))
    maps = []
    for m in range(C.n_morphisms):
        name = C.mor_names[m]
        a, b = C.src[m], C.tgt[m]
        if C.is_identity(m):
            from .fincat import identity_functor
            maps.append(identity_functor(values[a]))
            continue
        if name not in map_defs or map_defs[name][0] != "functor":
            raise SpecParseError("missing functor block for arrow %r" % name)
        _, rows, ln = map_defs[name]
        oi_a, mi_a = indices[a]
        oi_b, mi_b = indices[b]
        obj_map = [None] * values[a].n_objects
        mor_map = [None] * values[a].n_morphisms
        for ln2, t2 in rows:
            if t2[0] == "obj":
                obj_map[oi_a[t2[1]]] = oi_b[t2[2]]
            elif t2[0] == "mor":
                mor_map[mi_a[t2[1]]] = mi_b[t2[2]]
            else:
                raise SpecParseError("expected obj/mor rows", ln2)
        for o in range(values[a].n_objects):
            if obj_map[o] is None:
                raise SpecParseError("functor %r misses object %s"
                                     % (name, values[a].obj_names[o]), ln)
            mid = values[a].identity[o]
            if mor_map[mid] is None:
                mor_map[mid] = values[b].identity[obj_map[o]]
        if any(v is None for v in mor_map):
            missing = mor_map.index(None)
            raise SpecParseError("functor %r misses morphism %s"
                                 % (name, values[a].mor_names[missing]), ln)
        maps.append(CatFunctor(values[a], values[b], obj_map, mor_map))
    return CatDiagram(C, values, maps)


def _apply_markings(diagram, obj_index, markings, marked_extra):
    values = []
    for o, name in enumerate(diagram.shape.obj_names):
        mode = markings.get(name, ("flat", None))[0]
        base = mark(diagram.values[o], mode)
        extra = frozenset(marked_extra.get(name, []))
        values.append(MarkedSSet(base.sset, base.marked | extra))
    return MarkedDiagram(diagram.shape, values, diagram.maps)


def serialize_sset(X, name="sset"):
    """Explicit-block serialization: per-degree counts plus full face and
    degeneracy tables, in the grammar accepted by ``value NAME explicit``."""
    lines = ["value %s explicit" % name]
    for n in range(X.cap + 1):
        lines.append("  count %d %d" % (n, X.counts[n]))
    for n in range(1, X.cap + 1):
        for i in range(n + 1):
            lines.append("  face %d %d %s"
                         % (n, i, " ".join(str(v) for v in X.faces[n][i])))
    for n in range(X.cap):
        for i in range(n + 1):
            lines.append("  degen %d %d %s"
                         % (n, i, " ".join(str(v) for v in X.degens[n][i])))
    lines.append("end")
    return "\n".join(lines) + "\n"


def serialize_marked(M, name="sset"):
    """Underlying explicit block plus the marked-edge id list."""
    text = serialize_sset(M.sset, name)
    return text + "marked %s %s\n" % (
        name, " ".join(str(e) for e in sorted(M.marked)))


def deserialize_sset(text):
    """Inverse of ``serialize_sset`` (single block, any leading name)."""
    rows = _tokenize(text)
    cur = _Cursor(rows)
    ln, head = cur.take()
    if head[0] != "value" or head[-1] != "explicit":
        raise SpecParseError("expected a 'value NAME explicit' block", ln)
    cap = 0
    probe = cur.pos
    while probe < len(rows):
        toks = rows[probe][1]
        if toks[0] == "count":
            cap = max(cap, int(toks[1]))
        if toks[0] == "end":
            break
        probe += 1
    return _parse_sset_block(cur, cap)


# -- reports -----------------------------------------------------------------

REPORT_HEADER = "# relnerve report v1"


class Report:
    def __init__(self):
        self.lines = [REPORT_HEADER]

    def add(self, *parts):
        self.lines.append(" ".join(str(p) for p in parts))

    def text(self):
        return "\n".join(self.lines) + "\n"
