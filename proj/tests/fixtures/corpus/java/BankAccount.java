/**
 * A simple bank account that keeps a balance and refuses to go below zero.
 *
 * @author Example Author
 * @since 1.0
 */
public class BankAccount {
    private final String owner;
    private double balance;

    /**
     * Creates an account for the given owner.
     *
     * @param owner the name of the account owner
     * @param initialBalance the starting balance, must not be negative
     * @throws IllegalArgumentException if the initial balance is negative
     */
    public BankAccount(String owner, double initialBalance) {
        if (initialBalance < 0) {
            throw new IllegalArgumentException("negative balance");
        }
        this.owner = owner;
        this.balance = initialBalance;
    }

    /**
     * Adds money to the account.
     *
     * @param amount the amount to add
     */
    public void deposit(double amount) {
        balance += amount;
    }

    /**
     * Takes money out of the account if the balance allows it.
     *
     * @param amount the amount to take out
     * @return true if the money was taken out
     */
    public boolean withdraw(double amount) {
        if (amount > balance) {
            return false;
        }
        balance -= amount;
        return true;
    }

    /** @return the current balance */
    public double getBalance() {
        return balance;
    }

    public String getOwner() {
        return owner;
    }
}
