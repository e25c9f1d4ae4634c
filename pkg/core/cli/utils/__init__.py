"""wildcount CLI utilities"""
