"""Built-in Thue systems and Parikh rewriting systems."""

from __future__ import annotations

from .thue import RuleFamily, ThueSystem

# binary rules that move one letter past a pair of the other
R1_PAIRS = (("abb", "bab"), ("bab", "bba"), ("bba", "abb"))
R2_PAIRS = (("baa", "aba"), ("aba", "aab"), ("aab", "baa"))


def swap_ac() -> RuleFamily:
    return RuleFamily.finite("swap-ac", "ac", "ca")


def ab_family(id: str = "abxba", infix: str = "ab") -> RuleFamily:
    return RuleFamily.family(id, ("ab", "ba"), ("ba", "ab"), infix)


def bc_family(id: str = "bcxcb", infix: str = "bc") -> RuleFamily:
    return RuleFamily.family(id, ("bc", "cb"), ("cb", "bc"), infix)


def r1r2_rules(pairs=R1_PAIRS + R2_PAIRS) -> list[RuleFamily]:
    return [RuleFamily.finite(f"{y}-{z}", y, z) for y, z in pairs]


def _thue() -> dict:
    return {
        "binary-swap": lambda: ThueSystem("ab", [RuleFamily.finite("swap-ab", "ab", "ba")]),
        "binary-ex1506b": lambda: ThueSystem("ab", [ab_family()]),
        "ternary-ex0701c": lambda: ThueSystem(
            "abc", [swap_ac(), ab_family(infix="ab"), bc_family(infix="bc")]
        ),
        "salomaa": lambda: ThueSystem(
            "abc", [swap_ac(), ab_family(infix="abc"), bc_family(infix="abc")]
        ),
        "binary-R1R2": lambda: ThueSystem("ab", r1r2_rules()),
        "ternary-allswaps": lambda: ThueSystem(
            "abc",
            [
                swap_ac(),
                RuleFamily.finite("swap-bc", "bc", "cb"),
                RuleFamily.finite("swap-ab", "ab", "ba"),
            ],
        ),
    }


THUE_PRESETS = _thue()


def thue_preset(name: str) -> ThueSystem:
    return THUE_PRESETS[name]()


def _prs() -> dict:
    from .prs import ParikhRewritingSystem

    return {
        "binary-swap-ab": lambda: ParikhRewritingSystem(thue_preset("binary-swap"), ["ab"]),
        "salomaa-abc": lambda: ParikhRewritingSystem(thue_preset("salomaa"), ["abc"]),
        "ternary-allswaps": lambda: ParikhRewritingSystem(
            thue_preset("ternary-allswaps"), ["ab", "bc", "abc"]
        ),
        "binary-R1R2-ab": lambda: ParikhRewritingSystem(thue_preset("binary-R1R2"), ["ab"]),
    }


def prs_preset(name: str):
    return _prs()[name]()


def prs_preset_names() -> list[str]:
    return list(_prs())
