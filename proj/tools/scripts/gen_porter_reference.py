#!/usr/bin/env python3
# Copyright 2026 The Sumbench Authors.
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
"""Regenerates tests/testdata/porter_reference.tsv.

Stems come from NLTK's PorterStemmer in MARTIN_EXTENSIONS mode, which follows
Martin Porter's reference C implementation. Requires `pip install nltk`.

Usage: gen_porter_reference.py <repo root>
"""

import pathlib
import sys

from nltk.stem.porter import PorterStemmer

# Words exercising every rule group of the five steps, plus inflections
# derived from the shipped base-word list.
HAND_PICKED = """
caresses ponies ties caress cats feed agreed plastered bled motoring sing
conflated troubled sized hopping tanned falling hissing fizzed failing filing
happy sky relational conditional rational valenci hesitanci digitizer
conformabli radicalli differentli vileli analogousli vietnamization
predication operator feudalism decisiveness hopefulness callousness formaliti
sensitiviti sensibiliti triplicate formative formalize electriciti electrical
hopeful goodness revival allowance inference airliner gyroscopic adjustable
defensible irritant replacement adjustment dependent adoption homologou
communism activate angulariti homologous effective bowdlerize probate rate
cease controll roll generalizations oscillators abundantly archaeology
""".split()

SUFFIXES = ["s", "es", "ed", "ing", "ly", "ness", "ment", "ation", "ational",
            "izer", "ization", "ful", "ous", "ive", "able", "ible", "ance",
            "ence", "er", "ism", "ity", "al", "ic"]


def main() -> None:
    root = pathlib.Path(sys.argv[1])
    words_file = root / "core" / "resources" / "lemma_words.txt"
    base = [w.strip() for w in words_file.read_text().splitlines()
            if w.strip() and not w.startswith("#") and w.strip().isalpha()]
    words = list(HAND_PICKED)
    # Every 7th base word as-is, and every 11th with a rotating suffix.
    words += base[::7]
    for i, w in enumerate(base[::11]):
        words.append(w + SUFFIXES[i % len(SUFFIXES)])
    seen = set()
    unique = []
    for w in words:
        if w not in seen:
            seen.add(w)
            unique.append(w)
    stemmer = PorterStemmer(mode=PorterStemmer.MARTIN_EXTENSIONS)
    out = root / "tests" / "testdata" / "porter_reference.tsv"
    lines = ["# word\tstem (NLTK PorterStemmer, MARTIN_EXTENSIONS)"]
    lines += [f"{w}\t{stemmer.stem(w)}" for w in unique]
    out.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(unique)} pairs to {out}")


if __name__ == "__main__":
    main()
