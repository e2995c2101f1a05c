"""Test suite for the layerscore package."""
