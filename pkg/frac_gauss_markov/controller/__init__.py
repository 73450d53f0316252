from .Controller import Controller, EXIT_SUCCESS, EXIT_USAGE, EXIT_NUMERIC, EXIT_VALIDATION
