// A first in, first out queue made of linked nodes.
public class LinkedQueue<E> {
    private static class Node<E> {
        E value;
        Node<E> next;

        Node(E value) {
            this.value = value;
        }
    }

    private Node<E> head;
    private Node<E> tail;
    private int count;

    public void enqueue(E value) {
        Node<E> node = new Node<>(value);
        if (tail == null) {
            head = node;
        } else {
            tail.next = node;
        }
        tail = node;
        count++;
    }

    public E dequeue() {
        E value = head.value;
        head = head.next;
        if (head == null) {
            tail = null;
        }
        count--;
        return value;
    }

    public int getCount() {
        return count;
    }
}
