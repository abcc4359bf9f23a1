"""Weakest-link brute-force audit of 802.11 security stacks."""
