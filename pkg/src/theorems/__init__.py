"""Closed-form classification theorems and the sweeps that check them."""
