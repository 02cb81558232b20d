public class Palindrome {
    /**
     * Checks whether a word reads the same backwards.
     *
     * @param word the word to check
     * @return true when the word is a palindrome
     */
    public static boolean isPalindrome(String word) {
        int left = 0;
        int right = word.length() - 1;
        while (left < right) {
            if (word.charAt(left) != word.charAt(right)) {
                return false;
            }
            left++;
            right--;
        }
        return true;
    }

    public static String reverse(String word) {
        return new StringBuilder(word).reverse().toString();
    }
}
