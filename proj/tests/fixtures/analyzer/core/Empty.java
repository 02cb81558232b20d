// nothing to see here
