"""Core package for the rich-club topology toolkit."""
