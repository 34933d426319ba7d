"""Line-oriented text format for automata and transducers.

::

    # a* b over {a, b}
    alphabet: a b
    initial: q0
    final: q1
    q0 a q0
    q0 b q1

Transducer transitions read ``SRC IN/OUT DST``. ``@e`` is the empty word.
"""

import re

from .automata import EPS, RESERVED, Nfa
from .errors import FormatError
from .transducer import Transducer

EPS_TOKEN = "@e"
STATE_RE = re.compile(r"[A-Za-z0-9_]+\Z")
DIRECTIVES = ("alphabet", "initial", "final")


def _label(tok, symbols, path, lineno):
    if tok == EPS_TOKEN:
        return EPS
    if tok not in symbols:
        raise FormatError(f"label {tok!r} is not in the alphabet", path, lineno)
    return tok


def _state(tok, path, lineno):
    if not STATE_RE.match(tok):
        raise FormatError(f"bad state name {tok!r}", path, lineno)
    return tok


def _parse(text, path, want):
    header = {}
    body = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.match(r"([A-Za-z_]+)\s*:(.*)\Z", line)
        if m:
            key = m.group(1)
            if key not in DIRECTIVES:
                raise FormatError(f"unknown directive {key!r}", path, lineno)
            if body:
                raise FormatError(f"directive {key!r} after transitions", path, lineno)
            if key in header:
                raise FormatError(f"duplicate directive {key!r}", path, lineno)
            header[key] = (m.group(2).split(), lineno)
            continue
        body.append((line.split(), lineno))
    for key in DIRECTIVES:
        if key not in header:
            raise FormatError(f"missing {key!r} directive", path)
    symbols, lineno = header["alphabet"]
    for s in symbols:
        if len(s) != 1 or s in RESERVED or not s.isprintable():
            raise FormatError(f"bad alphabet symbol {s!r}", path, lineno)
    if not symbols or len(set(symbols)) != len(symbols):
        raise FormatError("alphabet must be nonempty without duplicates", path, lineno)
    initial = [_state(s, path, header["initial"][1]) for s in header["initial"][0]]
    final = [_state(s, path, header["final"][1]) for s in header["final"][0]]
    trans = []
    for toks, lineno in body:
        if len(toks) != 3:
            raise FormatError(f"expected 'SRC LABEL DST', got {' '.join(toks)!r}", path, lineno)
        src, lab, dst = toks
        src, dst = _state(src, path, lineno), _state(dst, path, lineno)
        if want == "nfa":
            if "/" in lab:
                raise FormatError("transducer label in an automaton file", path, lineno)
            trans.append((src, _label(lab, symbols, path, lineno), dst))
        else:
            parts = lab.split("/")
            if len(parts) != 2:
                raise FormatError(f"expected IN/OUT label, got {lab!r}", path, lineno)
            x, y = (_label(p, symbols, path, lineno) for p in parts)
            trans.append((src, x, y, dst))
    if want == "nfa":
        return Nfa(symbols, trans, initial=initial, final=final)
    if not initial:
        raise FormatError("transducer needs at least one initial state", path,
                          header["initial"][1])
    return Transducer(symbols, trans, initial=initial, final=final)


def parse_nfa(text, path=None):
    return _parse(text, path, "nfa")


def parse_transducer(text, path=None):
    return _parse(text, path, "transducer")


def parse_machine(text, path=None):
    """Parse either kind, deciding by the presence of ``IN/OUT`` labels."""
    for raw in text.splitlines():
        toks = raw.split("#", 1)[0].split()
        if len(toks) == 3 and ":" not in toks[0] and "/" in toks[1]:
            return parse_transducer(text, path)
    return parse_nfa(text, path)


def _tok(label):
    return EPS_TOKEN if label == EPS else label


def serialize(m):
    """Render an ``Nfa`` or ``Transducer``; states and transitions are sorted."""
    for s in m.states:
        if not STATE_RE.match(s):
            raise FormatError(f"state name {s!r} cannot be written")
    order = {s: i for i, s in enumerate(m.alphabet)}
    lines = [
        "alphabet: " + " ".join(m.alphabet),
        "initial: " + " ".join(sorted(m.initial)),
        "final: " + " ".join(sorted(m.final)),
    ]
    if isinstance(m, Transducer):
        for p, x, y, q in sorted(m.transitions,
                                 key=lambda e: (e[0], order.get(e[1], -1), order.get(e[2], -1), e[3])):
            lines.append(f"{p} {_tok(x)}/{_tok(y)} {q}")
    else:
        for p, x, q in sorted(m.transitions, key=lambda e: (e[0], order.get(e[1], -1), e[2])):
            lines.append(f"{p} {_tok(x)} {q}")
    return "\n".join(lines) + "\n"


def load(path, kind=None):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if kind == "nfa":
        return parse_nfa(text, path)
    if kind == "transducer":
        return parse_transducer(text, path)
    return parse_machine(text, path)


def dump(m, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(m))
