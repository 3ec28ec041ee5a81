"""
HTTP surface of hidden_homfly.
"""
