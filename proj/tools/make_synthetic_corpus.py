#!/usr/bin/env python3
"""Writes data/synthetic.jsonl and data/comparisons.jsonl.

Sentences mark noun phrases with [brackets]; groundings refer to bracket
indices. The output is deterministic.
"""

import json
import re
import sys
from pathlib import Path

POS = {
    "the": "DT", "a": "DT", "an": "DT", "another": "DT", "there": "EX",
    "of": "IN", "than": "IN", "by": "IN", "and": "CC", "is": "VBZ",
    "are": "VBP", "equals": "VBZ", "same": "JJ", "first": "JJ",
    "second": "JJ", "other": "JJ", "less": "JJR", "more": "JJR",
    "twice": "RB", "thrice": "RB", "double": "JJ", "triple": "JJ",
    "times": "NNS", "increased": "VBN", "multiplied": "VBN",
    "number": "NN", "numbers": "NNS", "sum": "NN", "difference": "NN",
    "product": "NN", "ratio": "NN", "notes": "NNS", "coins": "NNS",
    "bills": "NNS", "stamps": "NNS", "two": "CD", "three": "CD",
    "four": "CD", "five": "CD", ".": ".",
}


def pos_tag(token):
    low = token.lower()
    if low in POS:
        return POS[low]
    if re.fullmatch(r"\d+(\.\d+)?", token):
        return "CD"
    if re.fullmatch(r"\d+-\w+", token):
        return "JJ"
    return "NN"


def tokenize(text):
    tokens = []
    for word in text.split():
        if word.endswith(".") and len(word) > 1:
            tokens += [word[:-1], "."]
        else:
            tokens.append(word)
    return tokens


def example(marked, equation, groundings):
    text = ""
    spans = []
    start = None
    for ch in marked:
        if ch == "[":
            start = len(text)
        elif ch == "]":
            spans.append([start, len(text)])
        else:
            text += ch
    tokens = tokenize(text)
    return {
        "text": text,
        "tokens": tokens,
        "pos": [pos_tag(t) for t in tokens],
        "np_chunks": spans,
        "equation": equation,
        "groundings": [
            [{"label": label, "np_span": spans[i]} for label, i in member]
            for member in groundings
        ],
    }


def synthetic():
    out = []
    for n in (80, 45, 62, 104):
        out.append(example(f"[The sum] of [two numbers] is {n}.",
                           f"(= (+ V1 V2) {n})", [[("V1", 1), ("V2", 1)]]))
    for n in (12, 7, 31):
        out.append(example(f"[The difference] of [two numbers] is {n}.",
                           f"(= (- V1 V2) {n})", [[("V1", 1), ("V2", 1)]]))
    for a, b in ((15, 42), (8, 30), (23, 51), (6, 19)):
        out.append(example(f"[The sum] of [a number] and {a} is {b}.",
                           f"(= (+ V1 {a}) {b})", [[("V1", 1)]]))
    for a, b in ((6, 54), (4, 36), (9, 72)):
        out.append(example(f"[The product] of [a number] and {a} is {b}.",
                           f"(= (* V1 {a}) {b})", [[("V1", 1)]]))
    for a, b in ((4, 9), (3, 11), (5, 6), (8, 2)):
        out.append(example(f"[The ratio] of [a number] and {a} is {b}.",
                           f"(= (/ V1 {a}) {b})", [[("V1", 1)]]))
    out.append(example("Twice [a number] is 18.", "(= (* 2 V1) 18)",
                       [[("V1", 0)]]))
    out.append(example("Thrice [a number] equals 27.", "(= (* 3 V1) 27)",
                       [[("V1", 0)]]))
    out.append(example("4 times [a number] is 36.", "(= (* 4 V1) 36)",
                       [[("V1", 0)]]))
    out.append(example("7 times [a number] equals 63.", "(= (* 7 V1) 63)",
                       [[("V1", 0)]]))
    out.append(example("[A number] is 7 less than 30.", "(= V1 (- 30 7))",
                       [[("V1", 0)]]))
    out.append(example("9 less than [a number] is 20.", "(= (- V1 9) 20)",
                       [[("V1", 0)]]))
    out.append(example("[A number] is 4 less than [another number].",
                       "(= V1 (- V2 4))", [[("V1", 0), ("V2", 1)]]))
    out.append(example("14 less than [a number] equals 3.", "(= (- V1 14) 3)",
                       [[("V1", 0)]]))
    out.append(example("[A number] is 12 more than 25.", "(= V1 (+ 12 25))",
                       [[("V1", 0)]]))
    out.append(example("5 more than [a number] is 19.", "(= (+ 5 V1) 19)",
                       [[("V1", 0)]]))
    out.append(example("[A number] is 6 more than [another number].",
                       "(= V1 (+ 6 V2))", [[("V1", 0), ("V2", 1)]]))
    out.append(example("11 more than [a number] equals 40.",
                       "(= (+ 11 V1) 40)", [[("V1", 0)]]))
    for total, a, b, noun in ((54, 5, 10, "notes"), (40, 2, 5, "coins"),
                              (33, 10, 20, "bills"), (25, 3, 7, "stamps")):
        out.append(example(
            f"There are {total} [{a}-dollar] and [{b}-dollar {noun}].",
            f"(= {total} (+ V1 V2))", [[("V1", 0), ("V2", 1)]]))
    for a, b in ((8, 21), (13, 40), (2, 17)):
        out.append(example(f"[A number] increased by {a} is {b}.",
                           f"(= (+ V1 {a}) {b})", [[("V1", 0)]]))
    for a, b in ((7, 56), (3, 27), (12, 48)):
        out.append(example(f"[A number] multiplied by {a} is {b}.",
                           f"(= (* V1 {a}) {b})", [[("V1", 0)]]))
    return out


def comparisons():
    same = [[("V1", 0), ("V1", 1)]]
    return [
        example("Twice [a number] equals 16 less than triple "
                "[the same number].", "(= (* 2 V1) (- (* 3 V1) 16))", same),
        example("Thrice [a number] equals 20 more than twice "
                "[the same number].", "(= (* 3 V1) (+ 20 (* 2 V1)))", same),
        example("Double [a number] equals 9 less than triple "
                "[the same number].", "(= (* 2 V1) (- (* 3 V1) 9))", same),
        example("Triple [a number] equals 14 more than twice "
                "[the same number].", "(= (* 3 V1) (+ 14 (* 2 V1)))", same),
        example("Twice [a number] equals 30 less than thrice "
                "[the same number].", "(= (* 2 V1) (- (* 3 V1) 30))", same),
    ]


def write(path, rows):
    with open(path, "w", encoding="utf-8") as f:
        for row in rows:
            f.write(json.dumps(row, ensure_ascii=False) + "\n")


def main():
    data = Path(sys.argv[1]) if len(sys.argv) > 1 else (
        Path(__file__).resolve().parent.parent / "data")
    rows = synthetic()
    assert len(rows) == 40, len(rows)
    write(data / "synthetic.jsonl", rows)
    write(data / "comparisons.jsonl", comparisons())


if __name__ == "__main__":
    main()
