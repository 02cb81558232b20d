LOW_STOCK = 3


class Inventory:
    def __init__(self):
        self.items = {}

    def add_item(self, product, quantity):
        self.items[product] = self.items.get(product, 0) + quantity

    def low_stock_products(self):
        # Products that need to be ordered again.
        return [p for p, q in self.items.items() if q < LOW_STOCK]
