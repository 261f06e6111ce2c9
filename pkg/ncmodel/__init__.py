"""ncmodel - Noncommutative Smooth Models Package"""

__version__ = "0.1.0"
