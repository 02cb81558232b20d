import java.util.HashMap;
import java.util.Map;

/**
 * Keeps the grades of every student in a class and computes the average
 * grade of the whole class.
 */
public class GradeBook {
    private final Map<String, Integer> grades = new HashMap<>();

    /**
     * Records a grade.
     *
     * @param student the name of the student
     * @param grade a number between 0 and 100
     */
    public void addGrade(String student, int grade) {
        grades.put(student, grade);
    }

    public double averageGrade() {
        if (grades.isEmpty()) {
            return 0;
        }
        int sum = 0;
        for (int grade : grades.values()) {
            sum += grade;
        }
        return (double) sum / grades.size();
    }

    public String bestStudent() {
        String best = null;
        int highest = -1;
        for (Map.Entry<String, Integer> entry : grades.entrySet()) {
            if (entry.getValue() > highest) {
                highest = entry.getValue();
                best = entry.getKey();
            }
        }
        return best;
    }
}
