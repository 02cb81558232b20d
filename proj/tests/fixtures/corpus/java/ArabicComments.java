// برنامج بسيط لحساب المجموع
public class ArabicComments {
    /*
     * هذه الدالة تحسب مجموع الأرقام
     * في المصفوفة.
     */
    public static int sum(int[] values) {
        int total = 0;
        for (int value : values) {
            total += value; // أضف القيمة
        }
        return total;
    }

    public static void main(String[] args) {
        int[] numbers = {1, 2, 3, 4};
        System.out.println(sum(numbers));
    }
}
