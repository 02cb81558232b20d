/**
 * מחלקה שמחשבת ממוצע של ציונים.
 */
public class HebrewComments {
    // רשימת הציונים
    private double[] scores;

    public HebrewComments(double[] scores) {
        this.scores = scores;
    }

    /** מחזירה את הממוצע. */
    public double average() {
        double sum = 0;
        for (double score : scores) {
            sum += score;
        }
        return scores.length == 0 ? 0 : sum / scores.length;
    }
}
