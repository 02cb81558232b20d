import java.util.ArrayList;
import java.util.List;

public class Inventory {
    /** One line of the inventory: a product and how many are left. */
    public static class Item {
        final String product;
        int quantity;

        Item(String product, int quantity) {
            this.product = product;
            this.quantity = quantity;
        }
    }

    private final List<Item> items = new ArrayList<>();
    private static final int LOW_STOCK = 3;

    public void addItem(String product, int quantity) {
        items.add(new Item(product, quantity));
    }

    // Returns the products that need to be ordered again.
    public List<String> lowStockProducts() {
        List<String> result = new ArrayList<>();
        for (Item item : items) {
            if (item.quantity < LOW_STOCK) {
                result.add(item.product);
            }
        }
        return result;
    }
}
