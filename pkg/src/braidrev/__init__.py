"""Word reversing in Artin braid groups."""
