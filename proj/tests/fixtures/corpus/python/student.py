class Student:
    """A student in a class.

    :param name: the name of the student
    :type name: str
    :param age: the age in years
    """

    def __init__(self, name, age):
        self.name = name
        self.age = age
        self.average = 0.0

    def set_average(self, average):
        """Stores the average grade.

        :param average: the new average grade
        """
        self.average = average

    def __repr__(self):
        return f"Student({self.name!r}, {self.age})"
