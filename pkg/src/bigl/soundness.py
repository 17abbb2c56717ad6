"""Empirical checks of the rewrite engine on a random word corpus."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .algebra import GROUP, OSC, Element, render_word
from .relations import build_group_rules, build_oscillator_rules
from .rewrite import all_generators, all_normal_forms, normal_order
from .scalar import Laurent


def random_corpus(count: int = 500, seed: int = 20241015, max_len: int = 4, n_max: int = 2):
    """``count`` random (n, alphabet, word) triples, reproducible from ``seed``."""
    rng = random.Random(seed)
    alphabet_gens = {
        (n, a): all_generators(a, n) for n in range(1, n_max + 1) for a in (OSC, GROUP)
    }
    out = []
    for _ in range(count):
        n = rng.randint(1, n_max)
        a = rng.choice((OSC, GROUP))
        length = rng.randint(1, max_len)
        gens = alphabet_gens[n, a]
        out.append((n, a, tuple(rng.choice(gens) for _ in range(length))))
    return out


@dataclass
class SoundnessReport:
    words: int = 0
    non_confluent: list = field(default_factory=list)  # (n, alphabet, word, forms)
    strategy_mismatch: list = field(default_factory=list)
    idempotence: list = field(default_factory=list)
    linearity: list = field(default_factory=list)

    @property
    def confluent(self) -> bool:
        return not self.non_confluent and not self.strategy_mismatch

    def summary(self) -> str:
        lines = [
            f"{self.words} words, {len(self.non_confluent)} with several normal forms, "
            f"{len(self.strategy_mismatch)} engine/oracle mismatches, "
            f"{len(self.idempotence)} idempotence and {len(self.linearity)} linearity failures"
        ]
        for n, a, w, forms in self.non_confluent[:5]:
            lines.append(f"  n={n} {a}: {render_word(w)} has {len(forms)} normal forms")
            for f in sorted(forms, key=str):
                lines.append(f"      {f}")
        return "\n".join(lines)


def check_engine(corpus, seed: int = 7) -> SoundnessReport:
    rng = random.Random(seed)
    systems = {}

    def system(n, a):
        if (n, a) not in systems:
            systems[n, a] = build_oscillator_rules(n) if a == OSC else build_group_rules(n)
        return systems[n, a]

    rep = SoundnessReport()
    previous = {}
    for n, a, w in corpus:
        rep.words += 1
        sys_ = system(n, a)
        x = Element.word(*w)
        det = normal_order(x, sys_)
        forms = all_normal_forms(x, sys_)
        if len(forms) != 1:
            rep.non_confluent.append((n, a, w, forms))
        elif det not in forms:
            rep.strategy_mismatch.append((n, a, w, det, forms))
        if normal_order(det, sys_) != det:
            rep.idempotence.append((n, a, w))
        if (n, a) in previous:
            y = previous[n, a]
            c = Laurent.monomial(rng.choice((1, -1, 2)), rng.randint(-2, 2))
            if normal_order(x + y.scale(c), sys_) != det + normal_order(y, sys_).scale(c):
                rep.linearity.append((n, a, w))
        previous[n, a] = x
    return rep
