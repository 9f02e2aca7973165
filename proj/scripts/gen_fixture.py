#!/usr/bin/env python3
# Copyright 2026  TEVR Toolkit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#  http://www.apache.org/licenses/LICENSE-2.0
"""Generate the deterministic German fixture corpus used by the test suites.

Writes tests/data/german_fixture.txt: one pre-normalized sentence per line
(lowercase, single-spaced, no punctuation) over an alphabet of exactly 40
distinct characters: a-z, space, four German letters, and nine rare accented
letters carried by proper-noun-like words.

Regenerating with the same seed reproduces the file byte for byte.
"""

import collections
import random
import sys
from pathlib import Path

SEED = 20260810
NUM_SENTENCES = 1200

TARGET_ALPHABET = set("abcdefghijklmnopqrstuvwxyz ") | set("äöüß") | set("áéíóúšōčæ")

# Rare-letter carriers. Each must show up a handful of times so the alphabet
# and the exhaustive vocabularies stay stable across runs.
RARE_NAMES = ["josé", "garcía", "málaga", "gijón", "zúrich", "škoda", "čech", "tōkyō", "cæsar"]

NOUNS = [
    "haus", "garten", "wasser", "himmel", "sonne", "mond", "stern", "wald",
    "fluss", "berg", "tal", "stadt", "dorf", "brücke", "kirche", "schule",
    "kind", "mutter", "vater", "bruder", "schwester", "freund", "lehrer",
    "arzt", "bauer", "fischer", "jäger", "könig", "ritter", "drache",
    "pferd", "hund", "katze", "vogel", "fisch", "bär", "wolf", "fuchs",
    "hase", "maus", "blume", "baum", "blatt", "apfel", "brot", "käse",
    "milch", "honig", "zucker", "wein", "tisch", "stuhl", "bett", "fenster",
    "wand", "dach", "keller", "küche", "zimmer", "wagen", "schiff", "boot",
    "markt", "turm", "tor", "platz", "weg", "see", "insel", "wiese",
    "quelle", "quark", "taxi", "text", "hexe", "axt", "system", "yoga",
    "zeitung", "ordnung", "wanderung", "hoffnung", "meinung", "rechnung",
    "übung", "erzählung", "wohnung", "zeichnung", "sammlung", "erfahrung",
    "freiheit", "wahrheit", "schönheit", "krankheit", "klugheit", "gesundheit",
    "kindheit", "möglichkeit", "freundlichkeit", "fähigkeit", "tätigkeit",
    "ewigkeit", "mädchen", "kätzchen", "häuschen", "brötchen", "märchen",
    "freundschaft", "wissenschaft", "landschaft", "botschaft", "mannschaft",
    "geschichte", "geschenk", "gespräch", "gesicht", "gewitter", "gebirge",
]

PLURAL_NOUNS = [
    "kinder", "freunde", "bücher", "bäume", "blumen", "vögel", "fische",
    "pferde", "häuser", "gärten", "berge", "wälder", "felder", "wolken",
    "sterne", "geschichten", "zeitungen", "wanderungen", "hoffnungen",
    "meinungen", "übungen", "erzählungen", "wohnungen", "lieder", "wege",
]

VERBS = [
    "geht", "steht", "singt", "lacht", "spielt", "arbeitet", "wohnt",
    "schläft", "wartet", "lernt", "liest", "schreibt", "kommt", "bleibt",
    "fällt", "steigt", "trinkt", "kocht", "öffnet", "schließt", "heißt",
    "grüßt", "beginnt", "endet", "dauert", "scheint", "leuchtet", "wächst",
    "blüht", "fließt", "springt", "läuft", "ruht", "träumt", "denkt",
    "fragt", "antwortet", "erzählt", "vergisst", "findet", "sucht", "zeigt",
]

PLURAL_VERBS = [
    "gehen", "stehen", "singen", "lachen", "spielen", "arbeiten", "wohnen",
    "schlafen", "warten", "lernen", "lesen", "schreiben", "kommen", "bleiben",
    "fallen", "steigen", "trinken", "kochen", "blühen", "fließen", "springen",
    "laufen", "ruhen", "träumen", "denken", "fragen", "erzählen", "suchen",
]

ADJECTIVES = [
    "alt", "jung", "neu", "schön", "groß", "klein", "warm", "kalt", "hell",
    "dunkel", "laut", "leise", "stark", "schwach", "müde", "wach", "klug",
    "freundlich", "glücklich", "traurig", "ruhig", "wild", "frisch", "süß",
    "weich", "hart", "rund", "bunt", "grau", "blau", "grün", "rot", "gelb",
    "weiß", "schwarz", "braun", "ehrlich", "natürlich", "niedlich",
    "herrlich", "fröhlich", "friedlich", "gefährlich", "typisch", "praktisch",
    "komisch", "logisch", "magisch", "politisch", "gemütlich",
]

ADVERBS = [
    "heute", "morgen", "immer", "oft", "selten", "gern", "wieder", "noch",
    "schon", "bald", "jetzt", "hier", "dort", "draußen", "drinnen", "leise",
    "langsam", "schnell", "früh", "spät",
]

PLACES = [
    "berlin", "hamburg", "münchen", "köln", "bremen", "dresden", "leipzig",
    "weimar", "bonn", "kiel", "málaga", "gijón", "zúrich", "tōkyō",
]


def zipf_choice(rng, items):
    """Pick with weight proportional to 1/(rank+2); list order defines rank."""
    weights = [1.0 / (i + 2.0) for i in range(len(items))]
    return rng.choices(items, weights=weights, k=1)[0]


def make_sentence(rng):
    n = lambda: zipf_choice(rng, NOUNS)
    pn = lambda: zipf_choice(rng, PLURAL_NOUNS)
    v = lambda: zipf_choice(rng, VERBS)
    pv = lambda: zipf_choice(rng, PLURAL_VERBS)
    a = lambda: zipf_choice(rng, ADJECTIVES)
    adv = lambda: zipf_choice(rng, ADVERBS)
    pl = lambda: zipf_choice(rng, PLACES)
    name = lambda: zipf_choice(rng, RARE_NAMES)

    templates = [
        lambda: f"der {n()} ist {a()}",
        lambda: f"die {n()} war {a()} und {a()}",
        lambda: f"das {n()} ist sehr {a()}",
        lambda: f"der {a()} {n()} {v()} {adv()}",
        lambda: f"die {pn()} {pv()} {adv()} im {n()}",
        lambda: f"ein {n()} {v()} neben dem {n()}",
        lambda: f"eine {n()} {v()} unter dem {n()}",
        lambda: f"wir {pv()} {adv()} durch den {n()}",
        lambda: f"sie {pv()} mit dem {n()} über die {n()}",
        lambda: f"der {n()} und die {n()} {pv()} im {n()}",
        lambda: f"am morgen {v()} der {n()} im {n()}",
        lambda: f"im {n()} {v()} ein {a()} {n()}",
        lambda: f"die {n()} {v()} bei der {n()}",
        lambda: f"der {n()} {v()} nach {pl()}",
        lambda: f"wir fahren {adv()} nach {pl()}",
        lambda: f"die {pn()} sind {a()} aber {a()}",
        lambda: f"{adv()} {v()} die {n()} vor dem {n()}",
        lambda: f"der {n()} des {n()}s ist {a()}",
        lambda: f"ohne die {n()} {v()} der {n()} nicht",
        lambda: f"wenn der {n()} {v()} dann {v()} die {n()}",
        lambda: f"{name()} {v()} in {pl()}",
        lambda: f"der alte {name()} {v()} {adv()}",
    ]
    weights = [10, 8, 8, 7, 7, 6, 6, 6, 5, 5, 5, 5, 5, 4, 4, 4, 3, 3, 3, 3, 1, 1]
    template = rng.choices(templates, weights=weights, k=1)[0]
    return template()


def main():
    rng = random.Random(SEED)
    sentences = [make_sentence(rng) for _ in range(NUM_SENTENCES)]

    # A few fixed lines so every rare-letter word is guaranteed to repeat.
    for name in RARE_NAMES:
        sentences.append(f"{name} ist ein name aus einer alten geschichte")
    rng.shuffle(sentences)

    alphabet = set("".join(sentences))
    missing = TARGET_ALPHABET - alphabet
    extra = alphabet - TARGET_ALPHABET
    if missing or extra:
        sys.exit(f"alphabet drift: missing={sorted(missing)} extra={sorted(extra)}")

    # Quota fillability: enough distinct in-word substrings per length.
    per_len = {2: set(), 3: set(), 4: set()}
    for s in sentences:
        for word in s.split():
            for length, bag in per_len.items():
                for i in range(len(word) - length + 1):
                    bag.add(word[i:i + length])
    need = {4: 40, 3: 80, 2: 96}
    for length, quota in need.items():
        have = len(per_len[length])
        if have < 3 * quota:
            sys.exit(f"too few distinct {length}-grams: {have} < {3 * quota}")

    out = Path(__file__).resolve().parent.parent / "tests" / "data" / "german_fixture.txt"
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text("\n".join(sentences) + "\n", encoding="utf-8")

    counts = collections.Counter(w for s in sentences for w in s.split())
    print(f"wrote {len(sentences)} sentences, alphabet {len(alphabet)} chars, "
          f"{len(counts)} word types, "
          f"ngrams 2:{len(per_len[2])} 3:{len(per_len[3])} 4:{len(per_len[4])}")


if __name__ == "__main__":
    main()
