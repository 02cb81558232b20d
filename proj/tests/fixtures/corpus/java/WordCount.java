import java.util.Map;
import java.util.TreeMap;

// Counts how often each word appears in a text.
public class WordCount {
    public static Map<String, Integer> countWords(String text) {
        Map<String, Integer> counts = new TreeMap<>();
        for (String word : text.toLowerCase().split("\\s+")) {
            if (word.isEmpty()) {
                continue;
            }
            counts.merge(word, 1, Integer::sum);
        }
        return counts;
    }

    public static String mostCommon(Map<String, Integer> counts) {
        String winner = "";
        int maximum = 0;
        for (var entry : counts.entrySet()) {
            if (entry.getValue() > maximum) {
                maximum = entry.getValue();
                winner = entry.getKey();
            }
        }
        return winner;
    }
}
