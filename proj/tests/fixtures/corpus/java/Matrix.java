/**
 * Small dense matrix with the operations needed for the exercises.
 */
public class Matrix {
    private final double[][] cells;
    private final int rows;
    private final int columns;

    public Matrix(int rows, int columns) {
        this.rows = rows;
        this.columns = columns;
        this.cells = new double[rows][columns];
    }

    public double get(int row, int column) {
        return cells[row][column];
    }

    public void set(int row, int column, double value) {
        cells[row][column] = value;
    }

    /**
     * Multiplies this matrix by another one.
     *
     * @param other the right hand side; its row count must equal this
     *     matrix's column count
     * @return the product
     */
    public Matrix multiply(Matrix other) {
        Matrix result = new Matrix(rows, other.columns);
        for (int r = 0; r < rows; r++) {
            for (int c = 0; c < other.columns; c++) {
                double sum = 0.0;
                for (int k = 0; k < columns; k++) {
                    sum += cells[r][k] * other.cells[k][c];
                }
                result.cells[r][c] = sum;
            }
        }
        return result;
    }

    public Matrix transpose() {
        Matrix result = new Matrix(columns, rows);
        for (int r = 0; r < rows; r++)
            for (int c = 0; c < columns; c++)
                result.cells[c][r] = cells[r][c];
        return result;
    }
}
