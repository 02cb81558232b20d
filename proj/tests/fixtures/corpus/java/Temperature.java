/** Temperature scales and conversions between them. */
public enum Temperature {
    CELSIUS,
    FAHRENHEIT,
    KELVIN;

    private static final double FREEZING_POINT = 273.15;

    /**
     * Converts a value in this scale to degrees Celsius.
     *
     * @param value the temperature in this scale
     * @return the temperature in Celsius
     */
    public double toCelsius(double value) {
        switch (this) {
            case FAHRENHEIT:
                return (value - 32) * 5 / 9;
            case KELVIN:
                return value - FREEZING_POINT;
            default:
                return value;
        }
    }
}
