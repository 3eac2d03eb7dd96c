from typing import List, MutableSequence, Sequence, TypeVar

T = TypeVar("T")

MASK64 = (1 << 64) - 1


class SplitMix64:
    """Генератор SplitMix64: один и тот же seed дает одну и ту же последовательность в любой реализации"""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Равномерно на [lo, hi] (отбраковка, без смещения по модулю)"""
        if hi < lo:
            raise ValueError(f"empty range [{lo}, {hi}]")
        span = hi - lo + 1
        limit = ((1 << 64) // span) * span
        while True:
            value = self.next_u64()
            if value < limit:
                return lo + value % span

    def choice(self, items: Sequence[T]) -> T:
        return items[self.randint(0, len(items) - 1)]

    def shuffle(self, items: MutableSequence[T]) -> None:
        """Перемешивание Фишера–Йетса на месте"""
        for i in range(len(items) - 1, 0, -1):
            j = self.randint(0, i)
            items[i], items[j] = items[j], items[i]

    def bits(self, count: int) -> List[int]:
        return [self.next_u64() & 1 for _ in range(count)]

    def composition(self, total: int, parts: int) -> List[int]:
        """Случайное разбиение total на parts неотрицательных слагаемых (отсортированные точки разреза)"""
        cuts = sorted(self.randint(0, total) for _ in range(parts - 1))
        bounds = [0, *cuts, total]
        return [b - a for a, b in zip(bounds, bounds[1:])]
