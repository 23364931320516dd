"""Monte Carlo experiment runner and report persistence."""
