"""Certified Wilker- and Huygens-type trigonometric inequalities."""

__version__ = "0.1.0"
