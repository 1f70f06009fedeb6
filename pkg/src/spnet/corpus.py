"""Bundled example models.

The figures these models come from are only described in prose, so each net
is a reconstruction chosen to reproduce every stated behaviour (firing results,
enabledness, sign tables, domination verdicts).  ``provenance`` records what
each one was constrained by and which choices were free.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import SpnError
from .model import SignedPetriNet
from .modelio import canonicalize, load_model


@dataclass(frozen=True)
class ExampleModel:
    id: str
    source: str
    notes: str

    @property
    def filename(self) -> str:
        return f"{self.id}.spn.json"

    def text(self) -> str:
        return resources.files("spnet").joinpath("models", self.filename).read_text("utf-8")

    def load(self) -> SignedPetriNet:
        return load_model(self.text())


EXAMPLES: dict[str, ExampleModel] = {
    m.id: m
    for m in [
        ExampleModel(
            "fig1a",
            "firing example with mixed-sign arcs, four places",
            "Initial marking ((1,0,1,0),(1,0,0,0)). Arcs inferred from the two stated "
            "firings: t1 moves a positive token p1->p2 and adds a negative token to p3; "
            "t2 takes the negative token of p1, adds a positive token to p3 and negative "
            "tokens to p2 and p4. Matches the stated signs: both transitions and all "
            "places negative by arcs.",
        ),
        ExampleModel(
            "fig1b",
            "firing example with a disabled transition, four places",
            "Initial marking ((1,0,0,0),(0,0,0,0)). t1 is fixed by its firing result "
            "(p1 -> p3 positive, p4 negative). p2 and t2 are not described beyond t2 "
            "being disabled and negative, p2 negative and p1 positive by arcs; chosen "
            "as a negative arc p2->t2 and a positive arc t2->p1.",
        ),
        ExampleModel(
            "product-decision",
            "two-member product approval vote",
            "Board members p and q, decision place r. t1/t3 move a positive vote from "
            "p/q into r, t2/t4 a negative one. The sign of r after one firing per member "
            "gives the vote table. Initial marking is the closing scenario: p holds a positive "
            "token and q a negative one (the Yes/No row).",
        ),
        ExampleModel(
            "producer-consumer",
            "two producers and one consumer",
            "Only p6, p7, p8 and t7 have documented roles. Roles chosen: producer 1 "
            "cycles p1->t1->p2->t2->p1 on positive arcs and delivers into buffer p7; "
            "producer 2 cycles p3->t3->p4->t4->p3 on negative arcs and delivers into "
            "buffer p8; consumer-ready p5 buys from p7 via t5 or from p8 via t6 into "
            "p6; t7 is the shared consumption step p6->t7->p5. Excluding {p7,t7} or "
            "{p8,t7} then matches the two candidate sets named for the producers.",
        ),
        ExampleModel(
            "bees",
            "scout bees searching for food",
            "Initial marking ((3,0,0),(0,1,0)): three bees in hive p1, food at p2. "
            "t2/t3 send a bee from p1 to p2/p3 on positive arcs; t1/t4 bring food "
            "(negative tokens) from p2/p3 back to p1 on negative arcs. Symmetric for the "
            "two scouts, so only the marking decides which candidate set dominates.",
        ),
        ExampleModel(
            "plagiarism-k5",
            "document similarity search, k = 5",
            "Hub p0 has a negative arc to each t_i, which has a negative arc to p_i. "
            "The bundled marking is a post-matching marking in which p1 and p3 received "
            "a negative token.",
        ),
    ]
}


class UnknownExampleError(SpnError, KeyError):
    def __str__(self):
        return f"unknown example {self.args[0]!r}; known: {', '.join(EXAMPLES)}"


def get_example(example_id: str) -> ExampleModel:
    key = example_id.removesuffix(".spn.json")
    try:
        return EXAMPLES[key]
    except KeyError:
        raise UnknownExampleError(example_id) from None


def copy_example(example_id: str, dest: str | Path) -> Path:
    """Write the canonical model file of an example; ``dest`` may be a directory."""
    example = get_example(example_id)
    target = Path(dest)
    if target.is_dir():
        target = target / example.filename
    target.write_text(canonicalize(example.text()), encoding="utf-8")
    return target
