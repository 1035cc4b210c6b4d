"""Corpus-frequency information content.

Own counts are propagated upwards so that each concept's cumulative count is
its own count plus the counts of all its descendants.  A descendant reachable
through several parent paths contributes once.  Then ``IC(c) = -ln(cum(c) / cum(root))``.
"""

import math
from dataclasses import dataclass

from taxsim.errors import MalformedLine, NegativeCount, UnknownConcept, ZeroCumulative, ZeroTotal


@dataclass(frozen=True)
class FrequencyTable:
    own_count: tuple  # indexed by ConceptId

    def __getitem__(self, c):
        return self.own_count[c]


def parse_frequencies(text, tax):
    """Read ``concept<TAB>count`` lines into a :class:`FrequencyTable` bound to ``tax``."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    counts = [0] * len(tax.labels)
    seen = set()
    for lineno, line in enumerate(text.split("\n"), start=1):
        line = line.rstrip("\r")
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise MalformedLine(lineno, "expected concept<TAB>count")
        label, raw = fields
        try:
            value = int(raw.strip())
        except ValueError:
            raise MalformedLine(lineno, f"count {raw!r} is not an integer") from None
        if value < 0:
            raise NegativeCount(f"line {lineno}: negative count {value} for {label!r}")
        if label not in tax:
            raise UnknownConcept(label)
        if label in seen:
            raise MalformedLine(lineno, f"duplicate entry for {label!r}")
        seen.add(label)
        counts[tax.id(label)] = value
    return FrequencyTable(tuple(counts))


def load_frequencies(path, tax):
    with open(path, encoding="utf-8") as fh:
        return parse_frequencies(fh.read(), tax)


class IcTable:
    """Cumulative counts and information content for one taxonomy."""

    def __init__(self, tax, cum_count):
        self.tax = tax
        self.cum_count = tuple(cum_count)
        self.total = self.cum_count[tax.root]
        if self.total <= 0:
            raise ZeroTotal("no corpus mass: every frequency is zero")
        self._ic = tuple(
            # 0.0 - x keeps ic(root) at +0.0 rather than -0.0
            0.0 - math.log(k / self.total) if k > 0 else math.nan for k in self.cum_count
        )

    def ic(self, c):
        c = self.tax.resolve(c)
        value = self._ic[c]
        if math.isnan(value):
            raise ZeroCumulative(self.tax.labels[c])
        return value

    __getitem__ = ic


def build_ic(freq, tax):
    cum = [0] * len(tax.labels)
    for c, own in enumerate(freq.own_count):
        if own:
            for a in sorted(tax.up_distances(c)):
                cum[a] += own
    return IcTable(tax, cum)
