/** A twenty four hour clock. */
public class Clock {
    private int hours;
    private int minutes;

    public Clock(int hours, int minutes) {
        this.hours = hours;
        this.minutes = minutes;
    }

    // Moves the clock forward by one minute.
    public void tick() {
        minutes++;
        if (minutes == 60) {
            minutes = 0;
            hours = (hours + 1) % 24;
        }
    }

    public String show() {
        return String.format("%02d:%02d", hours, minutes);
    }
}
