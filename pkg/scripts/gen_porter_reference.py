#!/usr/bin/env python3
"""Regenerate the frozen stemmer agreement fixture.

Builds tests/data/porter_voc.txt (a ~23k-word vocabulary) and
tests/data/porter_expected.txt (the stem of each word, computed with the
independently authored reference implementation in _reference_stemmer.py).

The vocabulary is a deterministic sample of a large English word list plus
a hand-built set exercising every rule family of the algorithm. Source list:
`words.txt` from the npm package `word-list@4.1.0` (SIL English word list).

Usage:
    python scripts/gen_porter_reference.py [path/to/words.txt]
"""

import sys
from pathlib import Path

from _reference_stemmer import ReferencePorterStemmer

REPO = Path(__file__).resolve().parent.parent
OUT_VOC = REPO / "tests" / "data" / "porter_voc.txt"
OUT_EXPECTED = REPO / "tests" / "data" / "porter_expected.txt"

TARGET_SIZE = 23000

# every worked example from the 1980 paper, plus suffix-rule stress words
EDGE_CASES = """
caresses ponies ties caress cats feed agreed plastered bled motoring sing
conflated troubled sized hopping tanned falling hissing fizzed failing filing
happy sky relational conditional rational valenci hesitanci digitizer
conformabli radicalli differentli vileli analogousli vietnamization predication
operator feudalism decisiveness hopefulness callousness formaliti sensitiviti
sensibiliti triplicate formative formalize electriciti electrical hopeful
goodness revival allowance inference airliner gyroscopic adjustable defensible
irritant replacement adjustment dependent adoption homologou communism activate
angulariti homologi effective bowdlerize probate rate cease controll roll
skies dying lying tying dies agrees trees tree by oats oaten orrery private
troubles ivy die lie tie news innings inning outing canning howe proceed
exceed succeed sses ies eed ing ed abli logi geology theology archaeology
generalization generalizations oscillate oscillators sky spy fly try enjoy
enjoyment happily mapping mapped ratting rated matted matting meetings
meeting milling messing mate meet mill mess siez size conflate trouble
hiss fizz fail file deed creed bleed breed freed greed speed steed weed
need seed knee bee see flee free three agree decree degree pedigree
"""


def load_vocabulary(words_path: Path) -> list[str]:
    words = []
    for line in words_path.read_text().splitlines():
        w = line.strip().lower()
        if w and w.isalpha() and w.isascii():
            words.append(w)
    words = sorted(set(words))
    edge = sorted(set(EDGE_CASES.split()))
    step = max(1, len(words) // (TARGET_SIZE - len(edge)))
    sampled = words[::step]
    return sorted(set(sampled) | set(edge))


def main() -> int:
    words_path = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("/tmp/wl/package/words.txt")
    if not words_path.exists():
        print(f"word list not found: {words_path}", file=sys.stderr)
        print("fetch it with: npm pack word-list && tar xzf word-list-*.tgz", file=sys.stderr)
        return 1
    vocabulary = load_vocabulary(words_path)
    stemmer = ReferencePorterStemmer()
    stems = [stemmer.stem(w) for w in vocabulary]
    OUT_VOC.parent.mkdir(parents=True, exist_ok=True)
    OUT_VOC.write_text("\n".join(vocabulary) + "\n")
    OUT_EXPECTED.write_text("\n".join(stems) + "\n")
    print(f"wrote {len(vocabulary)} words to {OUT_VOC} and {OUT_EXPECTED}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
