#!/usr/bin/env python3
"""Print the excluded-middle verdict table.

Uniform mode plays one strategy against a whole family of interpretations
at once, so "winnable" here means winnable without knowing which member is
in force: validity at desk scale. Choice disjunction demands a committed
answer and fails; parallel disjunction lets the machine keep both halves
alive and wins.
"""

from colgame import (
    assignment_family,
    load_interp,
    parse,
    solve_formula_uniform,
)

ELEM = assignment_family(["p"])
GEN = [load_interp(f"em_general_{i}") for i in (1, 2, 3)]

ROWS = [
    ("~p \\/ p", ELEM, "parallel, elementary"),
    ("~P \\/ P", GEN, "parallel, general"),
    ("~p | p", ELEM, "choice, elementary"),
    ("~P | P", GEN, "choice, general"),
    ("(~p /\\ ~p) \\/ p", ELEM, "duplicated negative, elementary"),
    ("(~P /\\ ~P) \\/ P", GEN, "duplicated negative, general"),
]


def main() -> None:
    print(f"{'formula':24} {'family':32} winnable")
    for text, family, desc in ROWS:
        v = solve_formula_uniform(parse(text), family, budget=0)
        print(f"{text:24} {desc:32} {'yes' if v.winnable else 'no'}")


if __name__ == "__main__":
    main()
