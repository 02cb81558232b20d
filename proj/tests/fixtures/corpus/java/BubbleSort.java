public class BubbleSort {
    // Sorts the numbers from smallest to largest.
    public static void sort(int[] numbers) {
        boolean swapped = true;
        while (swapped) {
            swapped = false;
            for (int i = 1; i < numbers.length; i++) {
                if (numbers[i - 1] > numbers[i]) {
                    int temp = numbers[i];
                    numbers[i] = numbers[i - 1];
                    numbers[i - 1] = temp;
                    swapped = true;
                }
            }
        }
    }
}
