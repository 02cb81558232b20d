/**
 * Класс для подсчёта слов в строке.
 */
public class RussianComments {
    // Разделитель слов
    private static final String SEPARATOR = " ";

    /* Возвращает количество слов. */
    public static int countWords(String line) {
        if (line.isEmpty()) {
            return 0;
        }
        return line.split(SEPARATOR).length;
    }
}
