from dataclasses import dataclass, field


@dataclass(frozen=True)
class BlackboxRecord:
    """Hidden structure chosen by a blackbox generator.

    deutsch uses ``label``; dj uses ``label`` and ``one_states``; bv uses
    ``a``; simon uses ``s`` and ``f_table``.
    """

    variant: str
    label: str | None = None
    one_states: frozenset = field(default_factory=frozenset)
    a: tuple | None = None
    s: tuple | None = None
    f_table: dict | None = None

    @property
    def constant(self):
        if self.variant == "deutsch":
            return self.label in ("f(0,1) -> 0", "f(0,1) -> 1")
        if self.variant == "dj":
            return self.label == "constant"
        raise AttributeError(f"{self.variant} records have no constant/balanced label")
