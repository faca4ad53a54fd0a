#!/usr/bin/env python3
"""Writes data/spices-synthetic.cxt: 56 spices x 37 dish/flavour attributes.

Each spice belongs to one flavour family; a family fixes a core profile and
each spice adds a few seeded random attributes on top.
"""
import random
import sys
from pathlib import Path

SPICES = [
    "allspice", "anise", "basil", "bay leaf", "black pepper", "caraway", "cardamom",
    "cayenne", "celery seed", "chervil", "chili", "chives", "cinnamon", "clove",
    "coriander", "cumin", "curry leaf", "dill", "fennel", "fenugreek", "galangal",
    "garlic", "ginger", "horseradish", "juniper", "lavender", "lemongrass", "lovage",
    "mace", "marjoram", "mint", "mustard seed", "nigella", "nutmeg", "oregano",
    "paprika", "parsley", "pink pepper", "poppy seed", "rosemary", "saffron", "sage",
    "savory", "sesame", "star anise", "sumac", "szechuan pepper", "tarragon", "thyme",
    "turmeric", "vanilla", "wasabi", "white pepper", "za'atar", "long pepper", "ajwain",
]

ATTRIBUTES = [
    "beef", "pork", "lamb", "poultry", "fish", "seafood", "game", "vegetables",
    "potatoes", "rice", "pasta", "legumes", "eggs", "cheese", "mushrooms", "cabbage",
    "salad", "soup", "sauce", "marinade", "baking", "dessert", "fruit", "drinks",
    "pickling", "bread", "grill", "stew", "curry", "stir-fry", "sweet", "hot",
    "bitter", "fresh", "earthy", "citrus", "smoky",
]

FAMILIES = {
    "herb": ["vegetables", "salad", "soup", "sauce", "fresh", "poultry", "fish"],
    "warm": ["baking", "dessert", "sweet", "fruit", "drinks"],
    "pungent": ["hot", "grill", "marinade", "beef", "curry"],
    "seed": ["bread", "baking", "cabbage", "pickling", "earthy"],
    "mediterranean": ["lamb", "grill", "vegetables", "pasta", "cheese", "sauce", "earthy"],
    "asian": ["stir-fry", "rice", "seafood", "curry", "hot", "citrus"],
}

FAMILY_OF = {}
for name, fam in [
    (s, f)
    for f, members in {
        "herb": ["basil", "chervil", "chives", "dill", "lovage", "mint", "parsley", "tarragon", "curry leaf"],
        "warm": ["allspice", "anise", "cardamom", "cinnamon", "clove", "mace", "nutmeg", "star anise", "vanilla", "saffron"],
        "pungent": ["black pepper", "cayenne", "chili", "garlic", "horseradish", "mustard seed", "paprika",
                    "white pepper", "wasabi", "long pepper", "pink pepper"],
        "seed": ["caraway", "celery seed", "coriander", "cumin", "fennel", "fenugreek", "nigella", "poppy seed",
                 "sesame", "ajwain", "juniper"],
        "mediterranean": ["bay leaf", "lavender", "marjoram", "oregano", "rosemary", "sage", "savory", "thyme",
                          "sumac", "za'atar"],
        "asian": ["galangal", "ginger", "lemongrass", "szechuan pepper", "turmeric"],
    }.items()
    for s in members
]:
    FAMILY_OF[name] = fam


def main(out: Path, seed: int = 1991) -> None:
    assert len(SPICES) == 56 and len(ATTRIBUTES) == 37 and set(FAMILY_OF) == set(SPICES)
    rng = random.Random(seed)
    rows = []
    for spice in SPICES:
        core = set(FAMILIES[FAMILY_OF[spice]])
        # drop one core attribute now and then, add a few extras
        if rng.random() < 0.5:
            core.discard(rng.choice(sorted(core)))
        core.update(rng.sample(ATTRIBUTES, rng.randint(1, 3)))
        rows.append("".join("X" if a in core else "." for a in ATTRIBUTES))
    text = "B\nspices-synthetic\n%d\n%d\n\n" % (len(SPICES), len(ATTRIBUTES))
    text += "".join(s + "\n" for s in SPICES) + "".join(a + "\n" for a in ATTRIBUTES)
    text += "".join(r + "\n" for r in rows)
    out.write_text(text)


if __name__ == "__main__":
    main(Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data" / "spices-synthetic.cxt")
