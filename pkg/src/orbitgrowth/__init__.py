"""Orbit-separation growth for finite dynamical systems and their induced
hyperspace and measure systems."""

__version__ = "0.1.0"
