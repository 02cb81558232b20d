import java.util.ArrayList;
import java.util.List;

// The library lends books to its members.
public class Library {
    private final List<Book> books = new ArrayList<>();

    public void addBook(Book book) {
        books.add(book);
    }

    /**
     * Finds the first book with the given title that is not borrowed.
     *
     * @param title the title to look for
     * @return the book, or {@code null} when no copy is free
     */
    public Book findAvailable(String title) {
        for (Book book : books) {
            if (book.getTitle().equals(title) && !book.isBorrowed()) {
                return book;
            }
        }
        return null;
    }

    public int countBorrowed() {
        int count = 0;
        for (Book book : books) {
            if (book.isBorrowed()) count++;
        }
        return count;
    }
}
