"""wildcount CLI commands"""
