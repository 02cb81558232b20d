import java.util.ArrayList;

/* A tiny stack. */
public class Stack {
    private ArrayList<Integer> items = new ArrayList<>();

    public void push(int item) {
        items.add(item);
    }
}
