class Counter:
    def __init__(self):
        self.correct = 0
        self.total = 0

    def record(self, right):
        self.total += 1
        if right:
            self.correct += 1

    def frac(self):
        return self.correct / self.total if self.total else 0.0

    def pct(self):
        frac = self.frac()
        pct = round(frac * 100)
        return pct
