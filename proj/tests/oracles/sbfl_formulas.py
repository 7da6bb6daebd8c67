#!/usr/bin/env python3
# Copyright 2026 The ProFL Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Reference values for every suspiciousness formula on the {0..5}^4 lattice.

Usage: sbfl_formulas.py > tests/golden/sbfl_lattice.csv
"""

import itertools
import math
import sys
from fractions import Fraction


def div(a, b):
    return 0 if b == 0 else a / b


def wong3(ef, ep, nf, np_):
    if ep <= 2:
        h = ep
    elif ep <= 10:
        h = 2 + Fraction(1, 10) * (ep - 2)
    else:
        h = Fraction(28, 10) + Fraction(1, 1000) * (ep - 10)
    return ef - h


def tarantula(ef, ep, nf, np_):
    f = div(Fraction(ef), ef + nf)
    p = div(Fraction(ep), ep + np_)
    return div(f, f + p)


FORMULAS = [
    ("Ochiai", lambda ef, ep, nf, np_: div(ef, math.sqrt((ef + nf) * (ef + ep)))),
    ("Ochiai2", lambda ef, ep, nf, np_: div(
        ef * np_, math.sqrt((ef + ep) * (nf + np_) * (ef + np_) * (nf + ep)))),
    ("Tarantula", tarantula),
    ("SBI", lambda ef, ep, nf, np_: div(Fraction(ef), ef + ep)),
    ("Jaccard", lambda ef, ep, nf, np_: div(Fraction(ef), ef + nf + ep)),
    ("Kulczynski1", lambda ef, ep, nf, np_: div(Fraction(ef), nf + ep)),
    ("Kulczynski2", lambda ef, ep, nf, np_: (
        div(Fraction(ef), ef + nf) + div(Fraction(ef), ef + ep)) / 2),
    ("Dstar2", lambda ef, ep, nf, np_: div(Fraction(ef * ef), ep + nf)),
    ("Ample", lambda ef, ep, nf, np_: abs(
        div(Fraction(ef), ef + nf) - div(Fraction(ep), ep + np_))),
    ("Hamann", lambda ef, ep, nf, np_: div(
        Fraction(ef + np_ - ep - nf), ef + ep + nf + np_)),
    ("Hamming", lambda ef, ep, nf, np_: ef + np_),
    ("SorensenDice", lambda ef, ep, nf, np_: div(
        Fraction(2 * ef), 2 * ef + ep + nf)),
    ("Goodman", lambda ef, ep, nf, np_: div(
        Fraction(2 * ef - nf - ep), 2 * ef + nf + ep)),
    ("M1", lambda ef, ep, nf, np_: div(Fraction(ef + np_), nf + ep)),
    ("M2", lambda ef, ep, nf, np_: div(
        Fraction(ef), ef + np_ + 2 * (nf + ep))),
    ("Overlap", lambda ef, ep, nf, np_: div(Fraction(ef), min(ef, ep, nf))),
    ("RogersTanimoto", lambda ef, ep, nf, np_: div(
        Fraction(ef + np_), ef + np_ + 2 * (nf + ep))),
    ("SimpleMatching", lambda ef, ep, nf, np_: div(
        Fraction(ef + np_), ef + ep + nf + np_)),
    ("Sokal", lambda ef, ep, nf, np_: div(
        Fraction(2 * (ef + np_)), 2 * (ef + np_) + nf + ep)),
    ("Anderberg", lambda ef, ep, nf, np_: div(
        Fraction(ef), ef + 2 * (nf + ep))),
    ("Zoltar", lambda ef, ep, nf, np_: div(
        Fraction(ef), ef + nf + ep + div(Fraction(10000 * nf * ep), ef))),
    ("Wong1", lambda ef, ep, nf, np_: ef),
    ("Wong2", lambda ef, ep, nf, np_: ef - ep),
    ("Wong3", wong3),
    ("Euclid", lambda ef, ep, nf, np_: math.sqrt(ef + np_)),
    ("ER1a", lambda ef, ep, nf, np_: -1 if nf > 0 else np_),
    ("ER1b", lambda ef, ep, nf, np_: ef - div(Fraction(ep), ep + np_ + 1)),
    ("ER5a", lambda ef, ep, nf, np_: ef),
    ("ER5b", lambda ef, ep, nf, np_: div(Fraction(ef), ef + nf + ep + np_)),
    ("ER5c", lambda ef, ep, nf, np_: 0 if nf > 0 else 1),
    ("GP02", lambda ef, ep, nf, np_: 2 * (ef + math.sqrt(np_)) + math.sqrt(ep)),
    ("GP03", lambda ef, ep, nf, np_: math.sqrt(abs(ef * ef - math.sqrt(ep)))),
    ("GP13", lambda ef, ep, nf, np_: ef * (1 + div(Fraction(1), 2 * ep + ef))),
    ("GP19", lambda ef, ep, nf, np_: ef * math.sqrt(abs(ep - ef + nf - np_))),
]


def main():
    out = sys.stdout
    out.write("formula,ef,ep,nf,np,score\n")
    for name, fn in FORMULAS:
        for ef, ep, nf, np_ in itertools.product(range(6), repeat=4):
            value = float(fn(ef, ep, nf, np_))
            out.write(f"{name},{ef},{ep},{nf},{np_},{value!r}\n")


if __name__ == "__main__":
    main()
