"""Text formats for elections and outcome tables."""

from __future__ import annotations

import re

from .election import (COT, Election, Outcome, Preference, VoterBlock,
                       make_candidates, pair_of)

NAME_RE = re.compile(r"[A-Za-z0-9_]+\Z")


def _check_name(name: str) -> str:
    if not NAME_RE.match(name):
        raise ValueError(f"bad name {name!r}: use letters, digits, underscore")
    return name


def _lines(text: str) -> list[list[str]]:
    out = []
    for raw in text.splitlines():
        toks = raw.split("#", 1)[0].split()
        if toks:
            out.append(toks)
    return out


def parse_election(text: str) -> Election:
    lines = _lines(text)
    if not lines or lines[0] != ["ELECTION", "v1"]:
        raise ValueError("expected 'ELECTION v1' header")
    if len(lines) < 2 or lines[1][0] != "CANDIDATES":
        raise ValueError("expected CANDIDATES line after the header")
    names = [_check_name(n) for n in lines[1][1:]]
    if not names:
        raise ValueError("CANDIDATES line lists no candidates")
    if len(set(names)) != len(names):
        raise ValueError("duplicate candidate name")
    idx = {n: i for i, n in enumerate(names)}
    m = len(names)

    blocks = []
    for toks in lines[2:]:
        kind = toks[0]
        if kind not in ("ORDER", "TABLE"):
            raise ValueError(f"unknown line kind {kind!r}")
        if len(toks) < 3 or toks[2] != ":":
            raise ValueError(f"expected '{kind} <mult> : ...'")
        try:
            mult = int(toks[1])
        except ValueError:
            raise ValueError(f"bad multiplicity {toks[1]!r}") from None
        if mult < 1:
            raise ValueError(f"multiplicity must be >= 1, got {mult}")
        body = toks[3:]
        if kind == "ORDER":
            try:
                order = [idx[n] for n in body]
            except KeyError as e:
                raise ValueError(f"unknown candidate {e.args[0]!r}") from None
            if sorted(order) != list(range(m)):
                raise ValueError("ORDER must list every candidate exactly once")
            pref = Preference.from_order(order)
        else:
            table = {}
            for tok in body:
                a, sep, b = tok.partition(">")
                if not sep or a not in idx or b not in idx:
                    raise ValueError(f"bad table entry {tok!r}")
                key = pair_of(idx[a], idx[b])
                if key in table:
                    raise ValueError(f"pair {tok!r} repeated")
                table[key] = idx[a]
            pref = Preference.from_table(m, table)  # rejects partial tables
        blocks.append(VoterBlock(pref, mult))

    return Election(make_candidates(names), tuple(blocks))


def format_election(E: Election) -> str:
    for n in E.names:
        _check_name(n)
    out = ["ELECTION v1", "CANDIDATES " + " ".join(E.names)]
    for block in E.voters:
        pref = block.pref
        if pref.is_order:
            body = " ".join(E.names[c] for c in pref.order)
            out.append(f"ORDER {block.multiplicity} : {body}")
        else:
            toks = []
            for (i, j), w in sorted(pref.table().items()):
                l = j if w == i else i
                toks.append(f"{E.names[w]}>{E.names[l]}")
            out.append(f"TABLE {block.multiplicity} : " + " ".join(toks))
    return "\n".join(out) + "\n"


def parse_cot(text: str) -> COT:
    lines = _lines(text)
    if not lines or lines[0] != ["COT", "v1"]:
        raise ValueError("expected 'COT v1' header")
    body = lines[1:]
    names: list[str] = []
    if body and body[0][0] == "CANDIDATES":
        names = [_check_name(n) for n in body[0][1:]]
        if len(set(names)) != len(names):
            raise ValueError("duplicate candidate name")
        body = body[1:]
    pairs = []
    for toks in body:
        if toks[0] != "PAIR" or len(toks) != 4:
            raise ValueError(f"expected 'PAIR a b {{a|b|tie}}', got {toks!r}")
        pairs.append((toks[1], toks[2], toks[3]))
    if not names:
        seen: dict[str, None] = {}
        for a, b, _ in pairs:
            seen.setdefault(a)
            seen.setdefault(b)
        names = [_check_name(n) for n in seen]
    if not names:
        raise ValueError("no candidates")
    idx = {n: i for i, n in enumerate(names)}

    outcome = {}
    for a, b, res in pairs:
        if a not in idx or b not in idx:
            raise ValueError(f"unknown candidate in PAIR {a} {b}")
        key = pair_of(idx[a], idx[b])
        if key in outcome:
            raise ValueError(f"pair {a},{b} given twice")
        if res == "tie":
            outcome[key] = Outcome.TIE
        elif res == a:
            outcome[key] = Outcome.I_WINS if idx[a] < idx[b] else Outcome.L_WINS
        elif res == b:
            outcome[key] = Outcome.I_WINS if idx[b] < idx[a] else Outcome.L_WINS
        else:
            raise ValueError(f"PAIR result {res!r} is neither name nor 'tie'")
    return COT(tuple(names), outcome)  # COT itself rejects missing pairs


def format_cot(cot: COT) -> str:
    for n in cot.names:
        _check_name(n)
    out = ["COT v1", "CANDIDATES " + " ".join(cot.names)]
    for (i, j), o in sorted(cot.outcome.items()):
        a, b = cot.names[i], cot.names[j]
        res = "tie" if o is Outcome.TIE else (a if o is Outcome.I_WINS else b)
        out.append(f"PAIR {a} {b} {res}")
    return "\n".join(out) + "\n"
