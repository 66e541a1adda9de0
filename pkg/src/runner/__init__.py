from .runner import Runner, EXIT_OK, EXIT_FAILED, EXIT_USAGE
