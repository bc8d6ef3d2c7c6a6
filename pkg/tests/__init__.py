"""Test package for the exhauster converter."""
